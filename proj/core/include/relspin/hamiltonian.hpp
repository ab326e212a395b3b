#pragma once

#include <vector>

#include "relspin/convention.hpp"
#include "relspin/equation.hpp"

namespace relspin {

/// Phase point of the degenerate third-order Legendre picture.  p and pp are
/// covariant.  v, vp and H are reconstructions cached by the flow.
struct CanonicalState {
  double t = 0.0;
  Vec2 x{};
  Cov2 p{};
  Cov2 pp{};
  Vec2 v{};
  Vec2 vp{};
  double H = 0.0;
};

struct CanonicalTrajectory {
  std::vector<CanonicalState> samples;
  double step = 0.0;
  double mu = 0.0;
};

struct Momenta {
  Cov2 p;
  Cov2 pp;
};

/// Zero- and first-order momenta of the averaged Lagrangian:
///   p_a  = (*v')_a / W^3 - mu v_a / W,
///   pp_1 = v^2 / (2 W (1 + v_1 v^1)),   pp_2 = -v^1 / (2 W (1 + v_2 v^2)).
/// pp depends on v only.
Momenta momenta(Vec2 v, Vec2 vp, double mu, const Convention& conv);

/// Hamilton function H = *(v ^ v') / W^3 + mu / W; agrees with p.v + mu W.
/// The bivector star here contracts as eps_ba, matching the vector star.
double hamiltonian_value(Vec2 v, Vec2 vp, double mu, const Convention& conv);

/// Analytic Jacobi matrix d pp / d v of the first-order momentum map.
Mat2 dpp_dv(Vec2 v, const Convention& conv);

/// Inverse Jacobi block of the Legendre transformation.  delta is the
/// determinant of the bare cofactor matrix; the inverse carries the
/// prefactor 2 W^3 / delta.  (d v / d p) vanishes identically because pp
/// is a function of v alone.
struct JacobiBlock {
  Mat2 dv_dpp;
  double delta = 0.0;
};

JacobiBlock jacobi_block(Vec2 v, const Convention& conv);

struct LegendreInverse {
  Vec2 v;
  Vec2 vp;
};

/// Recovers (v, v') from (p, pp): v by damped Newton on the pp map (several
/// deterministic starts; the linearized guess v = (-2 pp_2, 2 pp_1) first),
/// then v' from the zero-order momentum by the inverse star.
LegendreInverse inverse_legendre(Cov2 p, Cov2 pp, double mu, const Convention& conv);

/// Canonical flow: p is conserved exactly and held; v is recovered from pp
/// each evaluation, v' from the zero-order momentum, and
/// dx/dt = v, dpp/dt = (dpp/dv) v'.
CanonicalTrajectory canonical_flow(const CanonicalState& state0, double mu,
                                   double t0, double t1, double step,
                                   const Convention& conv);

/// Convenience: the canonical state matching a position-space initial jet.
CanonicalState legendre_transform(double t, Vec2 x, Vec2 v, Vec2 vp, double mu,
                                  const Convention& conv);

}  // namespace relspin
