#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relspin/convention.hpp"

namespace relspin {

/// Third-order time-parametrized jet of a planar worldline.
struct Jet {
  double t = 0.0;
  Vec2 x{};
  Vec2 v{};     // dx/dt
  Vec2 vp{};    // dv/dt
  Vec2 vpp{};   // d2v/dt2
  std::optional<Vec2> vppp{};  // only the generic Euler-Poisson operator reads it
};

/// Proper-time-parametrized jet: event, 3-velocity and its first two tau-derivatives.
/// Invariants on admissible jets: u.u = 1, u.ud = 0.
struct ProperJet {
  Vec3 x{};
  Vec3 u{};
  Vec3 ud{};
  Vec3 udd{};
  double tau = 0.0;
};

enum class Method { rk4, dopri };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct Trajectory {
  std::vector<Jet> samples;
  Method method = Method::rk4;
  double step = 0.0;
  double mu = 0.0;
};

struct ProperTrajectory {
  std::vector<ProperJet> samples;
  double mu = 0.0;
};

/// Left side of the invariant third-order equation of motion, evaluated
/// componentwise (covariant index).  Zero exactly on solutions:
///
///   -(*v'')_a / W^3 + 3 (*v')_a (v.v') / W^5
///   + mu [ W^2 v'_a - (v'.v) v_a ] / W^3 = 0,      W^2 = 1 + v.v.
///
/// This is -d/dt of the zero-order canonical momentum, so solutions are
/// exactly the curves along which that momentum is conserved.
Cov2 residual_ep(const Jet& jet, double mu, const Convention& conv);

/// The unique v'' that makes residual_ep vanish at (v, v').  The leading
/// matrix is an invertible skew 2x2, so this is a closed-form un-star.
Vec2 solve_jerk(Vec2 v, Vec2 vp, double mu, const Convention& conv);

/// Integrates the equation of motion as a first-order system in (x, v, v'),
/// state dimension 6.  Sampled jets carry v'' = solve_jerk(v, v').
Trajectory integrate_worldline(Vec2 x0, Vec2 v0, Vec2 vp0, double mu,
                               double t0, double t1, double step, Method method,
                               const Convention& conv);

/// Pointwise proper-time reparametrization of a jet by exact chain rule:
/// u = (1, v)/W, with u-dot and u-ddot expanded analytically.  u.u = 1 holds
/// by construction.
ProperJet to_proper_jet(const Jet& jet, double tau, const Convention& conv);

/// Reparametrizes a whole trajectory; tau is accumulated by the trapezoid rule.
ProperTrajectory to_proper_time(const Trajectory& traj, const Convention& conv);

/// Residual of the proper-time form of the equation of motion,
/// udd x u + mu ud, returned contravariant.
Vec3 residual_proper(const ProperJet& pjet, double mu, const Convention& conv);

/// First curvature of the worldline, |ud| = sqrt(-ud.ud); constant along
/// solutions.  Throws NegativeRadicand if the jet is broken.
double curvature(const ProperJet& pjet, const Convention& conv);

}  // namespace relspin
