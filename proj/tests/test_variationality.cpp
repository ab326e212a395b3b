#include <cmath>

#include "doctest.h"
#include "relspin/coefficients.hpp"
#include "relspin/suites.hpp"

using namespace relspin;

namespace {
const Convention conv;
}

TEST_CASE("closed-form coefficients at v = 0") {
  const CoefficientField cf = motion_coefficients(2.0, conv);
  const Mat2 A = cf.A(0.0, {}, {});
  CHECK(A(0, 1) == 1.0);  // the chosen normalization constant
  CHECK(A(1, 0) == -1.0);
  CHECK(A(0, 0) == 0.0);

  const Mat2 B = cf.B(0.0, {}, {});
  CHECK(B(0, 0) == doctest::Approx(-2.0));  // mu g_ab at v = 0
  CHECK(B(1, 1) == doctest::Approx(-2.0));
  CHECK(B(0, 1) == 0.0);

  const Cov2 c = cf.c(0.0, {}, {});
  CHECK(c[0] == 0.0);
  CHECK(c[1] == 0.0);
}

TEST_CASE("coefficient field properties") {
  const CoefficientField cf = motion_coefficients(1.3, conv);
  suites::Sampler rng(31);
  for (int i = 0; i < 50; ++i) {
    const Vec2 v = rng.disk(0.9);
    const Mat2 A = cf.A(rng.uniform(-1, 1), rng.box(1.0), v);
    CHECK(A(0, 0) == 0.0);
    CHECK(A(0, 1) == doctest::Approx(-A(1, 0)));  // skew
    CHECK(std::abs(det(A)) > 0.0);                // invertible
    const Mat2 B = cf.B(0.0, {}, v);
    CHECK(B(0, 1) == doctest::Approx(B(1, 0)));   // symmetric
  }
}

TEST_CASE("assembled system reproduces the closed-form residual") {
  const double mu = 0.7;
  const CoefficientField cf = motion_coefficients(mu, conv);
  suites::Sampler rng(32);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Jet jet;
    jet.v = rng.disk(0.85);
    jet.vp = rng.box(1.0);
    jet.vpp = rng.box(1.0);
    const Cov2 diff = assemble(cf, jet, conv) - residual_ep(jet, mu, conv);
    worst = std::max({worst, std::abs(diff[0]), std::abs(diff[1])});
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("cartan line derivative") {
  const ScalarField only_v = [](double, Vec2, Vec2 v) { return v[0] * v[0] - v[1]; };
  CHECK(d1_apply(only_v, {0.2, {0.3, -0.5}, {0.4, 0.7}}) == doctest::Approx(0.0));

  const ScalarField time = [](double t, Vec2, Vec2) { return t; };
  CHECK(d1_apply(time, {0.0, {}, {}}) == doctest::Approx(1.0));

  const ScalarField x1 = [](double, Vec2 x, Vec2) { return x[0]; };
  CHECK(d1_apply(x1, {0.0, {}, {0.3, 0.4}}) == doctest::Approx(0.3));
}

TEST_CASE("variationality conditions hold for the equation coefficients") {
  const CoefficientField cf = motion_coefficients(1.0, conv);
  suites::Sampler rng(33);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const SamplePoint at{rng.uniform(-1, 1), rng.box(1.0), rng.disk(0.9)};
    worst = std::max(worst, helmholtz_residuals(cf, at, conv).max());
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("skew B violates exactly the antisymmetry condition") {
  // A = eps (constant skew), B = eps, c = 0: 2 B_[ab] = 2 eps, D1 A = 0
  CoefficientField cf;
  cf.A = [](double, Vec2, Vec2) {
    Mat2 a;
    a(0, 1) = 1.0;
    a(1, 0) = -1.0;
    return a;
  };
  cf.B = cf.A;
  cf.c = [](double, Vec2, Vec2) { return Cov2{}; };
  const HelmholtzResiduals hr = helmholtz_residuals(cf, {0.1, {0.2, 0.3}, {0.4, -0.2}}, conv);
  CHECK(hr.r[1] == doctest::Approx(2.0));
  CHECK(hr.r[0] < 1e-9);
  CHECK(hr.r[2] < 1e-9);
  CHECK(hr.r[3] < 1e-9);
  CHECK(hr.r[4] < 1e-9);
  CHECK(hr.r[5] < 1e-9);
}

TEST_CASE("mutations fire the conditions they break") {
  suites::Sampler rng(34);
  const SamplePoint at{0.4, {0.3, -0.2}, rng.disk(0.8)};

  // constant skew added to B: only (ii)
  {
    const auto hr = helmholtz_residuals(mutated_coefficients(1.0, conv, Mutation::skew_b), at, conv);
    CHECK(hr.r[1] > 1e-2);
    CHECK(hr.r[0] < 1e-6);
    CHECK(hr.r[2] < 1e-6);
    CHECK(hr.r[3] < 1e-6);
    CHECK(hr.r[4] < 1e-6);
    CHECK(hr.r[5] < 1e-6);
  }
  // v-dependent c: (iv) via d_v c, (v) via its second derivative
  {
    const auto hr = helmholtz_residuals(mutated_coefficients(1.0, conv, Mutation::c_vdep), at, conv);
    CHECK(hr.r[3] > 1e-2);
    CHECK(hr.r[4] > 1e-2);
    CHECK(hr.r[1] < 1e-6);
    CHECK(hr.r[5] < 1e-6);
  }
  // time-dependent A: (ii) via D1 A, (iii) via D1 d_v A
  {
    const auto hr = helmholtz_residuals(mutated_coefficients(1.0, conv, Mutation::a_tdep), at, conv);
    CHECK(hr.r[1] > 1e-2);
    CHECK(hr.r[2] > 1e-2);
    CHECK(hr.r[3] < 1e-6);
  }
  // the exponent fault is invisible to these conditions: an autonomous
  // isotropic deformation of A satisfies all six; the invariance identities
  // are what pins the exponent (see test_symmetry)
  {
    const auto hr = helmholtz_residuals(mutated_coefficients(1.0, conv, Mutation::a_exponent), at, conv);
    CHECK(hr.max() < 1e-6);
  }
}

TEST_CASE("full antisymmetrization vanishes identically in two dimensions") {
  // any skew-valued A, however wild, passes condition (i)
  CoefficientField cf = motion_coefficients(1.0, conv);
  cf.A = [](double, Vec2, Vec2 v) {
    Mat2 a;
    a(0, 1) = std::exp(v[0]) * std::cos(3.0 * v[1]) + v[0] * v[0] * v[1];
    a(1, 0) = -a(0, 1);
    return a;
  };
  suites::Sampler rng(35);
  for (int i = 0; i < 20; ++i) {
    const SamplePoint at{rng.uniform(-1, 1), rng.box(1.0), rng.disk(0.8)};
    CHECK(helmholtz_residuals(cf, at, conv).r[0] == 0.0);
  }
}

TEST_CASE("rough fields raise DerivativeNoise") {
  CoefficientField cf = motion_coefficients(1.0, conv);
  cf.A = [](double, Vec2, Vec2 v) {
    Mat2 a;
    a(0, 1) = std::abs(v[0] - 0.3);  // kink just off the sample point, inside
    a(1, 0) = -a(0, 1);              // the stencil, where the refinements disagree
    return a;
  };
  CHECK_THROWS_AS(helmholtz_residuals(cf, {0.0, {}, {0.300003, 0.1}}, conv),
                  DerivativeNoise);
}
