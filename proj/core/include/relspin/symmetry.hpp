#pragma once

#include <array>

#include "relspin/coefficients.hpp"
#include "relspin/convention.hpp"
#include "relspin/equation.hpp"

namespace relspin {

/// Infinitesimal Poincare generator: a planar rotation rate, a boost
/// parameter, and translations (which act trivially on the coefficient
/// fields but enter the finite map).
struct PoincareGen {
  double omega = 0.0;
  Vec2 piv{};
  Vec3 translations{};
};

/// The multiplier matrices of the invariance condition, evaluated at a
/// (v, v') point.  Xi and Pi are linear in the boost parameter and vanish
/// for pure rotations.
struct Multipliers {
  Mat2 Phi;
  Mat2 Xi;
  Mat2 Pi;
};

/// Assembles Phi (right-solved against A), Xi = -k (x) pi, and
/// Pi = (pi.v') A + 2 (A v') (x) pi.  Throws SingularA when A degenerates.
Multipliers multipliers(const CoefficientField& cf, Vec2 v, Vec2 vp,
                        const PoincareGen& gen, const Convention& conv);

/// Residual of the assembled invariance condition
///   X(k) = Phi k - Xi v - Pi v',
/// with X(k) realized by directional finite differences.
Cov2 invariance_condition_residual(const CoefficientField& cf, Vec2 v, Vec2 vp,
                                   const PoincareGen& gen, const Convention& conv);

/// Max-norm residuals of the six identities obtained by splitting the
/// invariance condition by powers of v' and by the parameters omega and pi.
/// Identities 14-16 carry the rotation sector, 17-19 the boost sector.
struct InvarianceResiduals {
  std::array<double, 6> r{};  // identities 14..19

  static const std::array<const char*, 6>& names();
  double max() const;
};

InvarianceResiduals invariance_residuals(const CoefficientField& cf, Vec2 v,
                                         Vec2 vp, const PoincareGen& gen,
                                         const Convention& conv);

/// Finite Lorentz matrix exp(lambda G) for the generator, acting on event
/// columns (t, x^1, x^2).
Mat3 lorentz_matrix(const PoincareGen& gen, double lambda, const Convention& conv);

/// Applies the finite Poincare map to a jet: events transform linearly
/// (plus translations) and (v, v', v'') are re-derived at the transformed
/// time by exact chain rule through dt'/dt.
Jet lorentz_transform_jet(const Jet& jet, const PoincareGen& gen, double lambda,
                          const Convention& conv);

}  // namespace relspin
