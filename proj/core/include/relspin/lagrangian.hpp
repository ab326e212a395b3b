#pragma once

#include <functional>

#include "relspin/convention.hpp"
#include "relspin/equation.hpp"

namespace relspin {

/// Selects one of the two Lagrange functions producing the equation of
/// motion, or their mean (the mean is what regularizes the Legendre map).
struct LagrangianSpec {
  enum class Which { L1, L2, mean };
  Which which = Which::mean;
  double mu = 1.0;
};

/// L_(a) = *(v' ^ e_(a)) v^a / (W (1 + g_aa |v ^ e_(a)|^2)) - mu W,
/// with W = sqrt(1 + v.v); affine in v'.
double eval_L(const LagrangianSpec& spec, Vec2 v, Vec2 vp, const Convention& conv);

/// d L / d v'^a as a covariant column, evaluated by a wide central slope
/// (exact for v'-affine L; the affinity is asserted and DerivativeNoise is
/// thrown if it fails).
Cov2 first_order_momentum(const LagrangianSpec& spec, Vec2 v, Vec2 vp,
                          const Convention& conv);

/// Generic numeric Euler-Poisson expression for a second-order Lagrangian,
///   E_a = -d/dt (dL/dv^a) + d^2/dt^2 (dL/dv'^a),
/// with total derivatives expanded by chain rule through the jet and partial
/// derivatives by finite differences.  The jet's v''' defaults to zero.
Cov2 euler_poisson_operator(const LagrangianSpec& spec, const Jet& jet,
                            const Convention& conv);

/// Same operator applied to an arbitrary L(v, v') that is affine in v'.
Cov2 euler_poisson_generic(const std::function<double(Vec2, Vec2)>& L,
                           const Jet& jet, const Convention& conv);

/// |(L2 - L1)(v, v') - D_t arctan(v^1 v^2 / W)|, the total-derivative gauge
/// relation between the two Lagrangians.
double gauge_difference_check(Vec2 v, Vec2 vp, const Convention& conv);

}  // namespace relspin
