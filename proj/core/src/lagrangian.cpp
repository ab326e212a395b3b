#include "relspin/lagrangian.hpp"

#include <cmath>

#include "relspin/fd.hpp"

namespace relspin {

namespace {

double eval_single(int a, double mu, Vec2 v, Vec2 vp, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  const Vec2 e = basis2(a);
  const double gaa = conv.metric_diag[a];  // spatial diagonal entry
  const double denom = 1.0 + gaa * bivector_inner(v, e, v, e, conv);
  if (std::abs(denom) < 1e-14) throw DegenerateDenominator();
  const double va = v[a - 1];
  return wedge(vp, e, conv) * va / (W * denom) - mu * W;
}

}  // namespace

double eval_L(const LagrangianSpec& spec, Vec2 v, Vec2 vp, const Convention& conv) {
  switch (spec.which) {
    case LagrangianSpec::Which::L1:
      return eval_single(1, spec.mu, v, vp, conv);
    case LagrangianSpec::Which::L2:
      return eval_single(2, spec.mu, v, vp, conv);
    case LagrangianSpec::Which::mean:
      return 0.5 * (eval_single(1, spec.mu, v, vp, conv) +
                    eval_single(2, spec.mu, v, vp, conv));
  }
  return 0.0;
}

namespace {

// wide central slope in v'^a; exact when L is affine in v'
constexpr double kSlopeStep = 0.5;

using Lfun = std::function<double(Vec2, Vec2)>;

double dL_dvp(const Lfun& L, Vec2 v, Vec2 vp, int a) {
  Vec2 plus = vp, minus = vp;
  plus[a] += kSlopeStep;
  minus[a] -= kSlopeStep;
  const double lp = L(v, plus);
  const double lm = L(v, minus);
  const double l0 = L(v, vp);
  if (std::abs(lp + lm - 2.0 * l0) > 1e-10 * std::max(1.0, std::abs(l0)))
    throw DerivativeNoise("Lagrangian is not affine in v'");
  return (lp - lm) / (2.0 * kSlopeStep);
}

Lfun as_fun(const LagrangianSpec& spec, const Convention& conv) {
  return [spec, conv](Vec2 v, Vec2 vp) { return eval_L(spec, v, vp, conv); };
}

}  // namespace

Cov2 first_order_momentum(const LagrangianSpec& spec, Vec2 v, Vec2 vp,
                          const Convention& conv) {
  const Lfun L = as_fun(spec, conv);
  return {dL_dvp(L, v, vp, 0), dL_dvp(L, v, vp, 1)};
}

Cov2 euler_poisson_generic(const Lfun& L, const Jet& jet, const Convention& conv) {
  (void)conv;
  const Vec2 v = jet.v, vp = jet.vp, vpp = jet.vpp;
  const Vec2 vppp = jet.vppp.value_or(Vec2{});

  Cov2 E;
  for (int a = 0; a < 2; ++a) {
    Vec2 ea{};
    ea[a] = 1.0;

    // D_t (dL/dv^a): mixed second derivative of L, one slot along e_a in v,
    // one along the jet direction (v', v'') in (v, v').
    auto g1 = [&](double sa, double ss) {
      return L(v + sa * ea + ss * vp, vp + ss * vpp);
    };
    const double dtg = fd::d2_mixed(g1, fd::kStep2);

    // D_t^2 (dL/dv'^a) = d^2/ds^2 sigma(z + s zdot) + d/ds sigma(z + s zddot)
    auto sigma_along = [&](Vec2 dv, Vec2 dvp) {
      return [&, dv, dvp](double s) {
        return dL_dvp(L, v + s * dv, vp + s * dvp, a);
      };
    };
    const double d2sig = fd::d2(sigma_along(vp, vpp), 1e-4);
    const double d1sig = fd::d1(sigma_along(vpp, vppp), 3e-4);

    E[a] = -dtg + d2sig + d1sig;
  }
  return E;
}

Cov2 euler_poisson_operator(const LagrangianSpec& spec, const Jet& jet,
                            const Convention& conv) {
  return euler_poisson_generic(as_fun(spec, conv), jet, conv);
}

double gauge_difference_check(Vec2 v, Vec2 vp, const Convention& conv) {
  const LagrangianSpec l1{LagrangianSpec::Which::L1, 1.0};
  const LagrangianSpec l2{LagrangianSpec::Which::L2, 1.0};
  const double diff = eval_L(l2, v, vp, conv) - eval_L(l1, v, vp, conv);

  auto f = [&](Vec2 w) {
    return std::atan(w[0] * w[1] / lorentz_factor(w, conv));
  };
  auto line = [&](double s) { return f(v + s * vp); };
  const double dtf = fd::d1(line, fd::kStep1);

  return std::abs(diff - dtf);
}

}  // namespace relspin
