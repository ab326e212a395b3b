#include "relspin/suites.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "relspin/fd.hpp"
#include "relspin/hamiltonian.hpp"
#include "relspin/lagrangian.hpp"
#include "relspin/spin.hpp"
#include "relspin/symmetry.hpp"

namespace relspin::suites {

double Sampler::u01() {
  // splitmix64; stable across platforms and standard-library versions
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double a, double b) { return a + (b - a) * u01(); }

Vec2 Sampler::disk(double rmax) {
  for (;;) {
    Vec2 v{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    if (norm2e(v) <= 1.0) return rmax * v;
  }
}

Vec2 Sampler::box(double half) {
  return {uniform(-half, half), uniform(-half, half)};
}

namespace {

CheckResult make(const std::string& suite, const std::string& name, int samples,
                 double max_residual, double tol) {
  return {suite, name, samples, max_residual, tol, max_residual < tol, {}, {}};
}

/// A control passes when the residual rises ABOVE the threshold.
CheckResult make_fires(const std::string& suite, const std::string& name, int samples,
                       double max_residual, double threshold) {
  return {suite, name,    samples, max_residual,
          threshold, max_residual > threshold, {}, {}};
}

double cov_max(Cov2 v) { return std::max(std::abs(v[0]), std::abs(v[1])); }

}  // namespace

// --------------------------------------------------------------------------
// helmholtz

std::vector<CheckResult> run_helmholtz(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  Sampler rng(opt.seed);
  const CoefficientField cf = mutated_coefficients(opt.mu, opt.conv, opt.mutation);

  constexpr int kSamples = 50;
  std::array<double, 6> worst{};
  std::array<std::vector<double>, 6> per_sample;
  for (int i = 0; i < kSamples; ++i) {
    const SamplePoint at{rng.uniform(-1.0, 1.0), rng.box(1.0), rng.disk(0.9)};
    const HelmholtzResiduals hr = helmholtz_residuals(cf, at, opt.conv);
    for (int c = 0; c < 6; ++c) {
      worst[c] = std::max(worst[c], hr.r[c]);
      per_sample[c].push_back(hr.r[c]);
    }
  }
  for (int c = 0; c < 6; ++c) {
    CheckResult res = make("helmholtz", std::string("condition-") +
                           HelmholtzResiduals::names()[c], kSamples, worst[c], 1e-6);
    res.residuals = per_sample[c];
    out.push_back(res);
  }

  if (opt.mutation != Mutation::none) return out;

  // assembled system shape against the closed-form residual
  {
    double worst_asm = 0.0;
    for (int i = 0; i < 100; ++i) {
      Jet jet;
      jet.v = rng.disk(0.85);
      jet.vp = rng.box(1.0);
      jet.vpp = rng.box(1.0);
      const Cov2 diff =
          assemble(cf, jet, opt.conv) - residual_ep(jet, opt.mu, opt.conv);
      worst_asm = std::max(worst_asm, cov_max(diff));
    }
    out.push_back(make("helmholtz", "assembled-shape-matches-residual", 100,
                       worst_asm, 1e-10));
  }

  // mutation controls: each fault must trip at least one condition
  for (Mutation m : {Mutation::skew_b, Mutation::c_vdep, Mutation::a_tdep}) {
    const CoefficientField bad = mutated_coefficients(opt.mu, opt.conv, m);
    double fired = 0.0;
    for (int i = 0; i < 10; ++i) {
      const SamplePoint at{rng.uniform(-1.0, 1.0), rng.box(1.0), rng.disk(0.9)};
      fired = std::max(fired, helmholtz_residuals(bad, at, opt.conv).max());
    }
    out.push_back(make_fires("helmholtz",
                             "mutation-control-" + mutation_name(m), 10, fired, 1e-2));
  }
  return out;
}

// --------------------------------------------------------------------------
// symmetry

std::vector<CheckResult> run_symmetry(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  Sampler rng(opt.seed);
  const CoefficientField cf = mutated_coefficients(opt.mu, opt.conv, opt.mutation);

  constexpr int kSamples = 50;
  std::array<double, 6> worst{};
  std::array<std::vector<double>, 6> per_sample;
  for (int i = 0; i < kSamples; ++i) {
    const Vec2 v = rng.disk(0.9);
    const Vec2 vp = rng.box(1.0);
    const PoincareGen gen{rng.uniform(-1.0, 1.0), rng.box(1.0), {}};
    const InvarianceResiduals ir = invariance_residuals(cf, v, vp, gen, opt.conv);
    for (int c = 0; c < 6; ++c) {
      worst[c] = std::max(worst[c], ir.r[c]);
      per_sample[c].push_back(ir.r[c]);
    }
  }
  for (int c = 0; c < 6; ++c) {
    CheckResult res = make("symmetry", std::string("identity-") +
                           InvarianceResiduals::names()[c], kSamples, worst[c], 1e-6);
    res.residuals = per_sample[c];
    out.push_back(res);
  }

  if (opt.mutation != Mutation::none) return out;

  // assembled invariance condition (moderate radius: nested differences)
  {
    double worst13 = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Vec2 v = rng.disk(0.7);
      const Vec2 vp = rng.box(1.0);
      const PoincareGen gen{rng.uniform(-1.0, 1.0), rng.box(1.0), {}};
      worst13 = std::max(
          worst13, cov_max(invariance_condition_residual(cf, v, vp, gen, opt.conv)));
    }
    out.push_back(make("symmetry", "assembled-invariance-condition", 20, worst13, 1e-6));
  }

  // finite maps carry solutions to solutions
  {
    double worst_boost = 0.0, worst_rot = 0.0;
    for (int i = 0; i < 10; ++i) {
      Jet jet;
      jet.t = rng.uniform(-1.0, 1.0);
      jet.x = rng.box(1.0);
      jet.v = rng.disk(0.7);
      jet.vp = rng.box(1.0);
      jet.vpp = solve_jerk(jet.v, jet.vp, opt.mu, opt.conv);

      const Vec2 dir = rng.box(1.0);
      const PoincareGen boost{0.0, dir, {rng.uniform(-1, 1), 0.0, 0.0}};
      const Jet bj = lorentz_transform_jet(jet, boost, rng.uniform(-0.5, 0.5), opt.conv);
      worst_boost =
          std::max(worst_boost, cov_max(residual_ep(bj, opt.mu, opt.conv)));

      const PoincareGen rot{rng.uniform(-1.0, 1.0), {}, {}};
      const Jet rj = lorentz_transform_jet(jet, rot, rng.uniform(-2.0, 2.0), opt.conv);
      worst_rot = std::max(worst_rot, cov_max(residual_ep(rj, opt.mu, opt.conv)));
    }
    out.push_back(make("symmetry", "finite-boost-maps-solutions", 10, worst_boost, 1e-8));
    out.push_back(make("symmetry", "finite-rotation-maps-solutions", 10, worst_rot, 1e-8));
  }

  // mutation controls against the invariance identities
  for (Mutation m : {Mutation::a_exponent, Mutation::b_vdep}) {
    const CoefficientField bad = mutated_coefficients(opt.mu, opt.conv, m);
    double fired = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Vec2 v = rng.disk(0.9);
      const Vec2 vp = rng.box(1.0);
      const PoincareGen gen{rng.uniform(-1.0, 1.0), rng.box(1.0), {}};
      fired = std::max(fired, invariance_residuals(bad, v, vp, gen, opt.conv).max());
    }
    out.push_back(make_fires("symmetry",
                             "mutation-control-" + mutation_name(m), 10, fired, 1e-2));
  }
  return out;
}

// --------------------------------------------------------------------------
// lagrangian

std::vector<CheckResult> run_lagrangian(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  Sampler rng(opt.seed);
  const double mu = opt.mu;

  // numeric Euler-Poisson of each Lagrangian against the closed-form
  // residual, with one recorded global sign
  constexpr double kSigma = +1.0;
  for (auto which : {LagrangianSpec::Which::L1, LagrangianSpec::Which::L2}) {
    const LagrangianSpec spec{which, mu};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      Jet jet;
      jet.v = rng.disk(0.9);
      jet.vp = rng.box(1.0);
      jet.vpp = rng.box(1.0);
      const Cov2 ep = euler_poisson_operator(spec, jet, opt.conv);
      const Cov2 rr = residual_ep(jet, mu, opt.conv);
      worst = std::max(worst, cov_max(ep - kSigma * rr));
    }
    const char* nm = which == LagrangianSpec::Which::L1 ? "euler-poisson-L1"
                                                        : "euler-poisson-L2";
    auto res = make("lagrangian", nm, 200, worst, 1e-5);
    res.extra.emplace_back("sigma", kSigma);
    out.push_back(res);
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i)
      worst = std::max(worst,
                       gauge_difference_check(rng.disk(0.9), rng.box(1.0), opt.conv));
    out.push_back(make("lagrangian", "gauge-total-derivative", 100, worst, 1e-7));
  }

  // the operator annihilates exact total time derivatives D_t f(v)
  {
    const Convention& conv = opt.conv;
    using Lfun = std::function<double(Vec2, Vec2)>;
    const std::vector<Lfun> basket = {
        [](Vec2 v, Vec2 vp) { return vp[0] * v[1] + v[0] * vp[1]; },  // f = v1 v2
        [conv](Vec2 v, Vec2 vp) {  // f = W
          return dot(v, vp, conv) / lorentz_factor(v, conv);
        },
        [conv](Vec2 v, Vec2 vp) {  // f = arctan(v1 v2 / W)
          const double W = lorentz_factor(v, conv);
          const double d1 = 1.0 - v[0] * v[0], d2 = 1.0 - v[1] * v[1];
          return vp[0] * v[1] / (W * d1) + v[0] * vp[1] / (W * d2);
        },
        [conv](Vec2 v, Vec2 vp) {  // f = (v.v)^2
          return 4.0 * dot(v, v, conv) * dot(v, vp, conv);
        },
    };
    double worst = 0.0;
    for (const Lfun& L : basket)
      for (int i = 0; i < 25; ++i) {
        Jet jet;
        jet.v = rng.disk(0.9);
        jet.vp = rng.box(1.0);
        jet.vpp = rng.box(1.0);
        worst = std::max(worst, cov_max(euler_poisson_generic(L, jet, opt.conv)));
      }
    out.push_back(make("lagrangian", "annihilates-total-derivatives", 100, worst, 1e-5));
  }

  // affine dependence on v': second differences vanish
  {
    double worst = 0.0;
    for (auto which : {LagrangianSpec::Which::L1, LagrangianSpec::Which::L2}) {
      const LagrangianSpec spec{which, mu};
      for (int i = 0; i < 50; ++i) {
        const Vec2 v = rng.disk(0.9);
        const Vec2 vp = rng.box(1.0);
        const Vec2 dir = rng.box(1.0);
        const double second = eval_L(spec, v, vp + dir, opt.conv) -
                              2.0 * eval_L(spec, v, vp, opt.conv) +
                              eval_L(spec, v, vp - dir, opt.conv);
        worst = std::max(worst, std::abs(second));
      }
    }
    out.push_back(make("lagrangian", "linear-in-vp", 100, worst, 1e-8));
  }
  return out;
}

// --------------------------------------------------------------------------
// hamiltonian

std::vector<CheckResult> run_hamiltonian(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  Sampler rng(opt.seed);
  const double mu = opt.mu;
  const Convention& conv = opt.conv;

  {  // Legendre roundtrip through momenta space
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Vec2 v = rng.disk(0.9);
      const Vec2 vp = rng.box(1.0);
      const Momenta m = momenta(v, vp, mu, conv);
      const LegendreInverse li = inverse_legendre(m.p, m.pp, mu, conv);
      const Momenta back = momenta(li.v, li.vp, mu, conv);
      worst = std::max({worst, cov_max(back.p - m.p), cov_max(back.pp - m.pp)});
    }
    out.push_back(make("hamiltonian", "legendre-roundtrip", 1000, worst, 1e-10));
  }

  {  // both closed forms of the Hamilton function
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Vec2 v = rng.disk(0.9);
      const Vec2 vp = rng.box(1.0);
      const double h1 = hamiltonian_value(v, vp, mu, conv);
      const Momenta m = momenta(v, vp, mu, conv);
      const double h2 = pair(m.p, v) + mu * lorentz_factor(v, conv);
      worst = std::max(worst, std::abs(h1 - h2));
    }
    out.push_back(make("hamiltonian", "hamilton-function-two-forms", 1000, worst, 1e-12));
  }

  {  // analytic inverse Jacobi block against the cofactor form
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Vec2 v = rng.disk(0.75);
      const JacobiBlock jb = jacobi_block(v, conv);
      const Mat2 byinv = inverse(dpp_dv(v, conv));
      double d = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          d = std::max(d, std::abs(jb.dv_dpp(a, b) - byinv(a, b)));
      worst = std::max(worst, d);
    }
    out.push_back(make("hamiltonian", "jacobi-block-cofactor-inverse", 100, worst, 1e-8));
  }

  {  // dv/dp = 0: v recovered from pp alone, for any p
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Vec2 v = rng.disk(0.75);
      const Vec2 vp = rng.box(1.0);
      const Momenta m = momenta(v, vp, mu, conv);
      const Cov2 other_p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
      const Vec2 v1 = inverse_legendre(m.p, m.pp, mu, conv).v;
      const Vec2 v2 = inverse_legendre(other_p, m.pp, mu, conv).v;
      worst = std::max(worst, norm2e(v1 - v2));
    }
    out.push_back(make("hamiltonian", "dv-dp-vanishes", 50, worst, 1e-12));
  }

  {  // flow equivalence and conservation over T = 10
    const Vec2 x0{0.0, 0.0}, v0{0.3, -0.1}, vp0{0.15, 0.2};
    const double T = 10.0, step = 1e-3;
    const Trajectory direct =
        integrate_worldline(x0, v0, vp0, mu, 0.0, T, step, Method::rk4, conv);
    const CanonicalState s0 = legendre_transform(0.0, x0, v0, vp0, mu, conv);
    const CanonicalTrajectory canon = canonical_flow(s0, mu, 0.0, T, step, conv);

    double dev = 0.0;
    const std::size_t n = std::min(direct.samples.size(), canon.samples.size());
    for (std::size_t i = 0; i < n; ++i)
      dev = std::max(dev, norm2e(direct.samples[i].x - canon.samples[i].x));
    out.push_back(make("hamiltonian", "two-flow-worldline-deviation", static_cast<int>(n),
                       dev, 1e-6));

    const double H0 = hamiltonian_value(v0, vp0, mu, conv);
    double h_direct = 0.0, h_canon = 0.0, p_drift = 0.0;
    const Momenta m0 = momenta(v0, vp0, mu, conv);
    for (const Jet& j : direct.samples) {
      const double H = hamiltonian_value(j.v, j.vp, mu, conv);
      h_direct = std::max(h_direct, std::abs(H - H0) / std::abs(H0));
      const Momenta m = momenta(j.v, j.vp, mu, conv);
      p_drift = std::max(p_drift, cov_max(m.p - m0.p));
    }
    for (const CanonicalState& s : canon.samples)
      h_canon = std::max(h_canon, std::abs(s.H - H0) / std::abs(H0));
    out.push_back(make("hamiltonian", "H-drift-direct-flow",
                       static_cast<int>(direct.samples.size()), h_direct, 1e-6));
    out.push_back(make("hamiltonian", "H-drift-canonical-flow",
                       static_cast<int>(canon.samples.size()), h_canon, 1e-6));
    out.push_back(make("hamiltonian", "p-drift-direct-flow",
                       static_cast<int>(direct.samples.size()), p_drift, 1e-8));
  }

  {  // the defect of the single-Lagrangian momentum maps
    double worst1 = 0.0, worst2 = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Vec2 v = rng.disk(0.9);
      const Vec2 vp = rng.box(1.0);
      const Cov2 pp1 =
          first_order_momentum({LagrangianSpec::Which::L1, mu}, v, vp, conv);
      const Cov2 pp2 =
          first_order_momentum({LagrangianSpec::Which::L2, mu}, v, vp, conv);
      worst1 = std::max(worst1, std::abs(pp1[0]));
      worst2 = std::max(worst2, std::abs(pp2[1]));
    }
    out.push_back(make("hamiltonian", "L1-first-momentum-component-vanishes", 100,
                       worst1, 1e-12));
    out.push_back(make("hamiltonian", "L2-second-momentum-component-vanishes", 100,
                       worst2, 1e-12));
  }
  return out;
}

// --------------------------------------------------------------------------
// spin

std::vector<CheckResult> run_spin(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  Sampler rng(opt.seed);
  const Convention& conv = opt.conv;
  const double m0 = 1.0;
  const double s3 = m0 / opt.mu;

  {  // calibration: exactly one (sigma, sgn_g) closes the coincidence
    double best = 0.0;
    int closing = 0;
    double sigma_found = 0.0;
    int sgn_found = 0;
    for (double sigma : {+1.0, -1.0})
      for (int sg : {+1, -1}) {
        Convention c2 = conv;
        c2.sgn_g = sg;
        Sampler local(opt.seed + 7);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
          const Vec2 v = local.disk(0.9);
          const Vec2 vp = local.box(1.0);
          const Cov2 P = dixon_momentum(v, vp, m0, s3, c2).P;
          const Momenta m = momenta(v, vp, m0 / s3, c2);
          worst = std::max(worst, norm2e(P - (sigma * s3) * m.p));
        }
        if (worst < 1e-10) {
          ++closing;
          best = worst;
          sigma_found = sigma;
          sgn_found = sg;
        }
      }
    CheckResult res = make("spin", "momentum-coincidence-calibration", 1000, best, 1e-10);
    res.pass = (closing == 1) && res.pass && sigma_found == kCoincidenceSign &&
               sgn_found == conv.sgn_g;
    res.extra.emplace_back("sigma", sigma_found);
    res.extra.emplace_back("sgn_g", static_cast<double>(sgn_found));
    out.push_back(res);
  }

  {  // the recorded sign, through the public check
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
      worst = std::max(worst, momentum_coincidence(rng.disk(0.9), rng.box(1.0), m0,
                                                   s3, conv));
    out.push_back(make("spin", "momentum-coincidence", 1000, worst, 1e-10));
  }

  {  // breaking mu = m0/s3 must break the coincidence
    double fired = 1e300;
    for (int i = 0; i < 20; ++i) {
      Vec2 v = rng.disk(0.9);
      if (norm2e(v) < 0.2) v = {0.4, 0.1};
      const Vec2 vp = rng.box(1.0);
      const Cov2 P = dixon_momentum(v, vp, m0, s3, conv).P;
      const Momenta m = momenta(v, vp, 1.5 * m0 / s3, conv);  // wrong mass
      fired = std::min(fired, norm2e(P - (kCoincidenceSign * s3) * m.p));
    }
    out.push_back(make_fires("spin", "coincidence-mu-mismatch-control", 20, fired, 1e-3));
  }

  {  // dual / undual roundtrip
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Mat3 S;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          const double x = rng.uniform(-1.0, 1.0);
          S(a, b) = x;
          S(b, a) = -x;
        }
      const Mat3 back = undual_spin(dual_spin(S, conv), conv);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          worst = std::max(worst, std::abs(back(a, b) - S(a, b)));
    }
    out.push_back(make("spin", "dual-roundtrip", 100, worst, 1e-12));
  }

  {  // a = (a.u) u - (a x u) x u for unit timelike u
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Vec2 vv = rng.disk(0.9);
      const double W = lorentz_factor(vv, conv);
      const Vec3 u{1.0 / W, vv[0] / W, vv[1] / W};
      const Vec3 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      const Vec3 rebuilt =
          dot(a, u, conv) * u - cross(cross(a, u, conv), u, conv);
      worst = std::max(worst, norm3e(rebuilt - a));
    }
    out.push_back(make("spin", "vector-decomposition-identity", 100, worst, 1e-10));
  }

  {  // along an integrated solution with supplementary-condition spin
    const double mu = opt.mu;
    const Trajectory traj = integrate_worldline({0, 0}, {0.3, -0.1}, {0.15, 0.2}, mu,
                                                0.0, 10.0, 1e-3, Method::rk4, conv);
    const ProperTrajectory ptraj = to_proper_time(traj, conv);

    double aud = 0.0, au = 0.0, plane = 0.0, mathisson = 0.0, pirani = 0.0;
    for (std::size_t i = 0; i < ptraj.samples.size(); i += 100) {
      const ProperJet& pj = ptraj.samples[i];
      const SpinState st = pirani_spin_from_motion(pj, m0, mu, conv);
      aud = std::max(aud, std::abs(dot(st.a, pj.ud, conv)));
      au = std::max(au, std::abs(dot(st.a, pj.u, conv) + m0 / mu));
      plane = std::max(plane, plane_consistency(pj, st, conv));
      mathisson = std::max(mathisson, mathisson_residual(pj, st, conv));
      pirani = std::max(pirani, pirani_check(st.S, pj.u, conv));
    }
    out.push_back(make("spin", "a-dot-ud-along-solutions", 101, aud, 1e-8));
    out.push_back(make("spin", "a-dot-u-mass-ratio", 101, au, 1e-8));
    out.push_back(make("spin", "plane-consistency", 101, plane, 1e-10));
    out.push_back(make("spin", "momentum-balance-residual", 101, mathisson, 1e-8));
    out.push_back(make("spin", "pirani-supplementary-condition", 101, pirani, 1e-12));

    const DixonResiduals dr = dixon_residuals(ptraj, m0, mu, conv);
    out.push_back(make("spin", "dixon-momentum-drift",
                       static_cast<int>(ptraj.samples.size()), dr.momentum_drift, 1e-5));
    out.push_back(make("spin", "dixon-spin-equation",
                       static_cast<int>(ptraj.samples.size()), dr.spin_equation, 1e-5));

    // control: a fabricated non-solution trajectory must fail the spin law
    ProperTrajectory fake;
    fake.mu = mu;
    for (int i = 0; i <= 200; ++i) {
      Jet jet;
      jet.t = i * 1e-2;
      jet.x = {0.3 * jet.t, 0.0};
      jet.v = {0.3, 0.0};
      jet.vp = {0.0, 0.5};  // claims curvature the straight line does not have
      jet.vpp = {0.0, 0.0};
      fake.samples.push_back(to_proper_jet(jet, jet.t * std::sqrt(1.0 - 0.09), conv));
    }
    const DixonResiduals bad = dixon_residuals(fake, m0, mu, conv);
    out.push_back(make_fires("spin", "dixon-non-solution-control", 201,
                             bad.spin_equation, 1e-2));
  }
  return out;
}

// --------------------------------------------------------------------------

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "helmholtz") return run_helmholtz(opt);
  if (name == "symmetry") return run_symmetry(opt);
  if (name == "lagrangian") return run_lagrangian(opt);
  if (name == "hamiltonian") return run_hamiltonian(opt);
  if (name == "spin") return run_spin(opt);
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const char* s : {"helmholtz", "symmetry", "lagrangian", "hamiltonian", "spin"}) {
      auto part = run_suite(s, opt);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw ConfigError("unknown suite: " + name);
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::string report_json(const std::vector<CheckResult>& results, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    nlohmann::ordered_json e;
    e["suite"] = r.suite;
    e["check"] = r.name;
    e["samples"] = r.samples;
    e["max_residual"] = r.max_residual;
    e["tolerance"] = r.tolerance;
    e["pass"] = r.pass;
    for (const auto& [k, v] : r.extra) e[k] = v;
    if (!r.residuals.empty()) e["residuals"] = r.residuals;
    j["checks"].push_back(e);
  }
  j["pass"] = all_pass(results);
  return j.dump(2);
}

}  // namespace relspin::suites
