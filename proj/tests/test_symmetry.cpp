#include <cmath>

#include "doctest.h"
#include "relspin/equation.hpp"
#include "relspin/suites.hpp"
#include "relspin/symmetry.hpp"

using namespace relspin;

namespace {
const Convention conv;

double mat_max(const Mat2& m) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}
}  // namespace

TEST_CASE("multipliers vanish for the zero generator") {
  const CoefficientField cf = motion_coefficients(1.0, conv);
  const Multipliers m = multipliers(cf, {0.3, -0.2}, {0.5, 0.1}, PoincareGen{}, conv);
  CHECK(mat_max(m.Phi) == 0.0);
  CHECK(mat_max(m.Xi) == 0.0);
  CHECK(mat_max(m.Pi) == 0.0);

  const InvarianceResiduals r =
      invariance_residuals(cf, {0.3, -0.2}, {0.5, 0.1}, PoincareGen{}, conv);
  CHECK(r.max() == 0.0);
}

TEST_CASE("Xi and Pi are boost-proportional") {
  const CoefficientField cf = motion_coefficients(1.0, conv);
  const PoincareGen rotation_only{0.8, {}, {}};
  const Multipliers m = multipliers(cf, {0.4, 0.1}, {-0.3, 0.6}, rotation_only, conv);
  CHECK(mat_max(m.Xi) == 0.0);
  CHECK(mat_max(m.Pi) == 0.0);
  CHECK(mat_max(m.Phi) > 0.0);
}

TEST_CASE("assembled invariance condition closes") {
  const CoefficientField cf = motion_coefficients(1.2, conv);
  suites::Sampler rng(41);
  double worst = 0.0;
  for (int i = 0; i < 30; ++i) {
    const Vec2 v = rng.disk(0.7);
    const Vec2 vp = rng.box(1.0);
    const PoincareGen gen{rng.uniform(-1, 1), rng.box(1.0), {}};
    const Cov2 r = invariance_condition_residual(cf, v, vp, gen, conv);
    worst = std::max({worst, std::abs(r[0]), std::abs(r[1])});
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("invariance identities hold for the equation coefficients") {
  const CoefficientField cf = motion_coefficients(0.8, conv);
  suites::Sampler rng(42);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Vec2 v = rng.disk(0.9);
    const Vec2 vp = rng.box(1.0);
    const PoincareGen gen{rng.uniform(-1, 1), rng.box(1.0), {}};
    worst = std::max(worst, invariance_residuals(cf, v, vp, gen, conv).max());
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("the A exponent is pinned by the boost identities") {
  const CoefficientField bad = mutated_coefficients(1.0, conv, Mutation::a_exponent);
  suites::Sampler rng(43);
  double r14 = 0.0, r15 = 0.0, r16 = 0.0, r17 = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Vec2 v = rng.disk(0.9);
    const Vec2 vp = rng.box(1.0);
    const PoincareGen gen{rng.uniform(-1, 1), rng.box(1.0), {}};
    const InvarianceResiduals r = invariance_residuals(bad, v, vp, gen, conv);
    r14 = std::max(r14, r.r[0]);
    r15 = std::max(r15, r.r[1]);
    r16 = std::max(r16, r.r[2]);
    r17 = std::max(r17, r.r[3]);
  }
  CHECK(r17 > 1e-2);  // boost sector sees the wrong power
  // the rotation sector cannot: any isotropic A(v) passes it
  CHECK(r14 < 1e-6);
  CHECK(r15 < 1e-6);
  CHECK(r16 < 1e-6);
}

TEST_CASE("a velocity-dependent B scale breaks only the boost sector") {
  const CoefficientField bad = mutated_coefficients(1.0, conv, Mutation::b_vdep);
  suites::Sampler rng(44);
  double r15 = 0.0, r18 = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Vec2 v = rng.disk(0.9);
    const Vec2 vp = rng.box(1.0);
    const PoincareGen gen{rng.uniform(-1, 1), rng.box(1.0), {}};
    const InvarianceResiduals r = invariance_residuals(bad, v, vp, gen, conv);
    r15 = std::max(r15, r.r[1]);
    r18 = std::max(r18, r.r[4]);
  }
  CHECK(r18 > 1e-2);
  CHECK(r15 < 1e-6);  // the scale is rotation-invariant
}

TEST_CASE("finite map basics") {
  Jet j;
  j.t = 0.4;
  j.x = {0.3, -0.2};
  j.v = {0.5, 0.1};
  j.vp = {-0.2, 0.3};
  j.vpp = {0.1, 0.2};

  // identity parameter
  const Jet same = lorentz_transform_jet(j, {0.7, {0.3, -0.4}, {1, 2, 3}}, 0.0, conv);
  CHECK(same.t == doctest::Approx(j.t));
  CHECK(norm2e(same.x - j.x) < 1e-15);
  CHECK(norm2e(same.v - j.v) < 1e-15);
  CHECK(norm2e(same.vpp - j.vpp) < 1e-15);

  // rotations preserve speed
  const Jet rot = lorentz_transform_jet(j, {1.0, {}, {}}, 0.9, conv);
  CHECK(norm2e(rot.v) == doctest::Approx(norm2e(j.v)));

  // boosting the rest frame yields |v| = tanh(rapidity)
  Jet rest;
  const Jet boosted = lorentz_transform_jet(rest, {0.0, {1.0, 0.0}, {}}, 0.7, conv);
  CHECK(boosted.v[0] == doctest::Approx(std::tanh(0.7)));
  CHECK(boosted.v[1] == doctest::Approx(0.0));

  // one-parameter group property of the matrix exponential
  const PoincareGen gen{0.4, {0.2, -0.5}, {}};
  const Mat3 l1 = lorentz_matrix(gen, 0.3, conv);
  const Mat3 l2 = lorentz_matrix(gen, 0.45, conv);
  const Mat3 l12 = lorentz_matrix(gen, 0.75, conv);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double prod = 0.0;
      for (int k = 0; k < 3; ++k) prod += l1(a, k) * l2(k, b);
      CHECK(prod == doctest::Approx(l12(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("solutions map to solutions under the finite group") {
  suites::Sampler rng(45);
  const double mu = 1.0;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    Jet j;
    j.t = rng.uniform(-1, 1);
    j.x = rng.box(1.0);
    j.v = rng.disk(0.7);
    j.vp = rng.box(1.0);
    j.vpp = solve_jerk(j.v, j.vp, mu, conv);

    const PoincareGen gen{rng.uniform(-1, 1), rng.box(1.0),
                          {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    const Jet out = lorentz_transform_jet(j, gen, rng.uniform(-0.5, 0.5), conv);
    const Cov2 r = residual_ep(out, mu, conv);
    worst = std::max({worst, std::abs(r[0]), std::abs(r[1])});
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("translations leave the residual unchanged exactly") {
  Jet j;
  j.t = 0.2;
  j.x = {0.5, -0.1};
  j.v = {0.3, 0.4};
  j.vp = {0.1, -0.6};
  j.vpp = {0.2, 0.3};
  const Cov2 before = residual_ep(j, 1.1, conv);
  const Jet moved =
      lorentz_transform_jet(j, {0.0, {}, {3.0, -2.0, 5.0}}, 1.0, conv);
  const Cov2 after = residual_ep(moved, 1.1, conv);
  CHECK(after[0] == before[0]);
  CHECK(after[1] == before[1]);
}

TEST_CASE("inadmissible jets are rejected by the finite map") {
  // a subluminal jet can never be boosted past the cone; a broken input can
  Jet j;
  j.v = {1.2, 0};
  CHECK_THROWS_AS(
      lorentz_transform_jet(j, {0.0, {-1.0, 0.0}, {}}, 5.0, conv),
      SuperluminalVelocity);
}

TEST_CASE("singular leading matrix is reported") {
  CoefficientField cf = motion_coefficients(1.0, conv);
  cf.A = [](double, Vec2, Vec2) { return Mat2{}; };
  CHECK_THROWS_AS(
      multipliers(cf, {0.1, 0.2}, {0.3, 0.4}, PoincareGen{1.0, {0.5, 0}, {}}, conv),
      SingularA);
}
