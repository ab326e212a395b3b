#pragma once

#include <array>
#include <functional>
#include <string>

#include "relspin/convention.hpp"
#include "relspin/equation.hpp"

namespace relspin {

/// A point of the (t, x, v) base space the coefficient fields live on.
struct SamplePoint {
  double t = 0.0;
  Vec2 x{};
  Vec2 v{};
};

using ScalarField = std::function<double(double t, Vec2 x, Vec2 v)>;
using MatField = std::function<Mat2(double t, Vec2 x, Vec2 v)>;
using CovField = std::function<Cov2(double t, Vec2 x, Vec2 v)>;

/// The coefficient triple (A, B, c) of the third-order system shape
///   A v'' + (v'.d_v)A v' + B v' + c = 0,
/// with A skew and invertible at admissible v.  Derivatives of the fields are
/// taken by central finite differences with Richardson refinement.
struct CoefficientField {
  MatField A;
  MatField B;
  CovField c;
  double fd_step = 1e-5;
};

/// Left side of the system shape assembled from a coefficient field at a jet
/// ((v'.d_v)A evaluated by finite differences).
Cov2 assemble(const CoefficientField& cf, const Jet& jet, const Convention& conv);

/// The closed-form coefficients of the invariant equation of motion:
///   A = eps / W^3,   B_ab = -mu (v_a v_b - W^2 g_ab) / W^3,   c = 0,
/// normalized so that the assembled system reproduces residual_ep exactly.
/// A and B depend on v only.
CoefficientField motion_coefficients(double mu, const Convention& conv);

/// Deliberate single-fault perturbations of the closed-form coefficients,
/// used as checker controls.
enum class Mutation {
  none,
  skew_b,      // adds a constant skew part to B
  c_vdep,      // makes c a v-dependent vector
  a_tdep,      // makes A time-dependent
  a_exponent,  // changes the power of the A denominator (3/2 -> 1)
  b_vdep,      // scales B by a velocity-dependent factor
};

std::string mutation_name(Mutation m);
Mutation mutation_from_name(const std::string& name);

CoefficientField mutated_coefficients(double mu, const Convention& conv, Mutation m);

/// D1 f = (d_t + v.d_x) f by a central line stencil along (1, v) in (t, x).
double d1_apply(const ScalarField& f, const SamplePoint& at);

/// Max-norm residuals of the six variationality conditions at a sample point.
/// Condition (i) is the full antisymmetrization of d_{v^a} A_bc, identically
/// zero when the velocity space is two-dimensional.
struct HelmholtzResiduals {
  std::array<double, 6> r{};  // conditions (i)..(vi)

  static const std::array<const char*, 6>& names();
  double max() const;
};

HelmholtzResiduals helmholtz_residuals(const CoefficientField& cf,
                                       const SamplePoint& at,
                                       const Convention& conv);

}  // namespace relspin
