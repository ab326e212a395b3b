#include <cmath>

#include "doctest.h"
#include "relspin/lagrangian.hpp"
#include "relspin/suites.hpp"

using namespace relspin;

namespace {
const Convention conv;
}

TEST_CASE("Lagrangian values at hand-checked points") {
  const double mu = 1.7;
  for (auto which : {LagrangianSpec::Which::L1, LagrangianSpec::Which::L2,
                     LagrangianSpec::Which::mean}) {
    const LagrangianSpec spec{which, mu};
    // at v = 0 the first term carries the factor v^a = 0
    CHECK(eval_L(spec, {0, 0}, {0.8, -0.3}, conv) == doctest::Approx(-mu));
    // at v' = 0 only the mass term survives
    const Vec2 v{0.5, -0.2};
    CHECK(eval_L(spec, v, {0, 0}, conv) ==
          doctest::Approx(-mu * lorentz_factor(v, conv)));
  }
}

TEST_CASE("Lagrangians are affine in the acceleration slot") {
  suites::Sampler rng(51);
  const LagrangianSpec spec{LagrangianSpec::Which::L1, 1.0};
  for (int i = 0; i < 50; ++i) {
    const Vec2 v = rng.disk(0.9);
    const Vec2 vp = rng.box(1.0);
    const double a = eval_L(spec, v, 2.0 * vp, conv) - eval_L(spec, v, {0, 0}, conv);
    const double b = eval_L(spec, v, vp, conv) - eval_L(spec, v, {0, 0}, conv);
    CHECK(a == doctest::Approx(2.0 * b));
  }
}

TEST_CASE("Euler-Poisson operator on the rest jet") {
  Jet rest;
  for (auto which : {LagrangianSpec::Which::L1, LagrangianSpec::Which::L2}) {
    const Cov2 e = euler_poisson_operator({which, 2.0}, rest, conv);
    CHECK(std::abs(e[0]) < 1e-9);
    CHECK(std::abs(e[1]) < 1e-9);
  }
}

TEST_CASE("both Lagrangians produce the equation of motion") {
  suites::Sampler rng(52);
  const double mu = 1.0;
  // one global sign, fixed once: sigma = +1
  double worst1 = 0.0, worst2 = 0.0, worst12 = 0.0;
  for (int i = 0; i < 200; ++i) {
    Jet jet;
    jet.v = rng.disk(0.9);
    jet.vp = rng.box(1.0);
    jet.vpp = rng.box(1.0);
    const Cov2 r = residual_ep(jet, mu, conv);
    const Cov2 e1 = euler_poisson_operator({LagrangianSpec::Which::L1, mu}, jet, conv);
    const Cov2 e2 = euler_poisson_operator({LagrangianSpec::Which::L2, mu}, jet, conv);
    worst1 = std::max({worst1, std::abs(e1[0] - r[0]), std::abs(e1[1] - r[1])});
    worst2 = std::max({worst2, std::abs(e2[0] - r[0]), std::abs(e2[1] - r[1])});
    worst12 = std::max({worst12, std::abs(e1[0] - e2[0]), std::abs(e1[1] - e2[1])});
  }
  CHECK(worst1 < 1e-5);
  CHECK(worst2 < 1e-5);
  CHECK(worst12 < 1e-5);  // they differ by a total derivative
}

TEST_CASE("the operator annihilates exact total derivatives") {
  suites::Sampler rng(53);
  // D_t f for f(v) = v1 v2, expanded in closed form
  const auto L = [](Vec2 v, Vec2 vp) { return vp[0] * v[1] + v[0] * vp[1]; };
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    Jet jet;
    jet.v = rng.disk(0.9);
    jet.vp = rng.box(1.0);
    jet.vpp = rng.box(1.0);
    const Cov2 e = euler_poisson_generic(L, jet, conv);
    worst = std::max({worst, std::abs(e[0]), std::abs(e[1])});
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("gauge difference is a total derivative") {
  CHECK(gauge_difference_check({0, 0}, {0.7, -0.4}, conv) == doctest::Approx(0.0));
  suites::Sampler rng(54);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i)
    worst = std::max(worst, gauge_difference_check(rng.disk(0.9), rng.box(1.0), conv));
  CHECK(worst < 1e-7);
}

TEST_CASE("gauge difference integrates to the endpoint difference") {
  const double mu = 1.0;
  const Trajectory traj = integrate_worldline({0, 0}, {0.3, -0.1}, {0.15, 0.2}, mu,
                                              0.0, 5.0, 1e-3, Method::rk4, conv);
  const LagrangianSpec l1{LagrangianSpec::Which::L1, mu};
  const LagrangianSpec l2{LagrangianSpec::Which::L2, mu};
  auto f = [&](const Jet& j) {
    return std::atan(j.v[0] * j.v[1] / lorentz_factor(j.v, conv));
  };
  auto g = [&](const Jet& j) {
    return eval_L(l2, j.v, j.vp, conv) - eval_L(l1, j.v, j.vp, conv);
  };
  // Simpson quadrature over the uniform grid
  double integral = 0.0;
  const double h = traj.step;
  const std::size_t n = traj.samples.size();
  REQUIRE(n % 2 == 1);
  for (std::size_t i = 0; i + 2 < n; i += 2)
    integral += h / 3.0 *
                (g(traj.samples[i]) + 4.0 * g(traj.samples[i + 1]) +
                 g(traj.samples[i + 2]));
  const double expected = f(traj.samples.back()) - f(traj.samples.front());
  CHECK(std::abs(integral - expected) < 1e-6);
}

TEST_CASE("degenerate denominator is reported") {
  // 1 + g_11 |v ^ e_1|^2 = 1 - (v^2)^2 collapses as v^2 -> 1; the point is
  // already superluminal, so the light-cone guard fires first
  CHECK_THROWS_AS(
      eval_L({LagrangianSpec::Which::L1, 1.0}, {0.0, 1.0}, {0.1, 0.1}, conv),
      SuperluminalVelocity);
}
