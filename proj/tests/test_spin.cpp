#include <cmath>

#include "doctest.h"
#include "relspin/hamiltonian.hpp"
#include "relspin/spin.hpp"
#include "relspin/suites.hpp"

using namespace relspin;

namespace {
const Convention conv;

Mat3 random_skew(suites::Sampler& rng) {
  Mat3 s;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const double x = rng.uniform(-1, 1);
      s(a, b) = x;
      s(b, a) = -x;
    }
  return s;
}

ProperTrajectory demo_solution(double mu) {
  const Trajectory traj = integrate_worldline({0, 0}, {0.3, -0.1}, {0.15, 0.2}, mu,
                                              0.0, 10.0, 1e-3, Method::rk4, conv);
  return to_proper_time(traj, conv);
}
}  // namespace

TEST_CASE("spin dualization") {
  const Vec3 zero = dual_spin(Mat3{}, conv);
  CHECK(norm3e(zero) == 0.0);

  Mat3 s;
  s(1, 2) = 1.0;
  s(2, 1) = -1.0;
  const Vec3 a = dual_spin(s, conv);
  CHECK(a[0] == doctest::Approx(1.0));
  CHECK(a[1] == 0.0);
  CHECK(a[2] == 0.0);

  suites::Sampler rng(71);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Mat3 S = random_skew(rng);
    const Mat3 back = undual_spin(dual_spin(S, conv), conv);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        worst = std::max(worst, std::abs(back(p, q) - S(p, q)));
    // and the other composition order
    const Vec3 v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Vec3 vback = dual_spin(undual_spin(v, conv), conv);
    worst = std::max(worst, norm3e(vback - v));
  }
  CHECK(worst < 1e-12);

  Mat3 notskew;
  notskew(0, 1) = 1.0;
  CHECK_THROWS_AS(dual_spin(notskew, conv), NotSkew);
}

TEST_CASE("supplementary condition characterizations") {
  CHECK(pirani_check(Mat3{}, {1, 0, 0}, conv) == 0.0);

  // a parallel to u passes
  const Vec3 u{1.25, 0.75, 0};  // unit: 1.5625 - 0.5625 = 1
  const Vec3 a = -0.8 * u;
  CHECK(pirani_check(undual_spin(a, conv), u, conv) < 1e-12);

  // a orthogonal to u fails
  const Vec3 b{0, 0, 1};
  CHECK(pirani_check(undual_spin(b, conv), u, conv) > 0.1);

  // the two characterizations vanish together
  suites::Sampler rng(72);
  for (int i = 0; i < 50; ++i) {
    const Mat3 S = random_skew(rng);
    const Vec3 dual = dual_spin(S, conv);
    const Vec3 uu{1, 0, 0};
    const Vec3 axu = cross(dual, uu, conv);
    Vec3 su{};
    const Vec3 ul = lower3(uu, conv);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) su[p] += S(p, q) * ul[q];
    CHECK(norm3e(axu) == doctest::Approx(norm3e(su)).epsilon(1e-10));
  }
}

TEST_CASE("mass renormalization") {
  CHECK(mass_renormalization(1.0, 0.5) == doctest::Approx(2.0));
  CHECK(mass_renormalization(0.0, 0.5) == 0.0);  // conformal limit
  CHECK_THROWS_AS(mass_renormalization(1.0, 0.0), ZeroSpin);

  // a.u = -m0/mu when a = -(m0/mu) u and u.u = 1
  const Vec3 u{1.25, 0.75, 0};
  const double m0 = 1.0, mu = 2.0;
  const Vec3 a = (-m0 / mu) * u;
  CHECK(dot(a, u, conv) == doctest::Approx(-m0 / mu).epsilon(1e-12));
}

TEST_CASE("spin state from the motion") {
  ProperJet rest;
  rest.u = {1, 0, 0};
  const SpinState st = pirani_spin_from_motion(rest, 1.0, 1.0, conv);
  CHECK(st.a[0] == doctest::Approx(-1.0));
  CHECK(st.a[1] == 0.0);
  CHECK(st.a[2] == 0.0);
  CHECK(st.s3 == doctest::Approx(1.0));  // s3 = -a.u = m0/mu
  CHECK(pirani_check(st.S, rest.u, conv) < 1e-12);

  CHECK_THROWS_AS(pirani_spin_from_motion(rest, 1.0, 0.0, conv), ZeroMu);
}

TEST_CASE("vector decomposition identity") {
  suites::Sampler rng(73);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Vec2 vv = rng.disk(0.9);
    const double W = lorentz_factor(vv, conv);
    const Vec3 u{1.0 / W, vv[0] / W, vv[1] / W};
    const Vec3 a{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Vec3 rebuilt = dot(a, u, conv) * u - cross(cross(a, u, conv), u, conv);
    worst = std::max(worst, norm3e(rebuilt - a));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("planar Dixon momentum") {
  const DixonMomentum zero = dixon_momentum({0, 0}, {0, 0}, 1.0, 1.0, conv);
  CHECK(norm2e(zero.P) == 0.0);

  const DixonMomentum d = dixon_momentum({0, 0}, {1, 0}, 1.0, 1.0, conv);
  CHECK(d.P[0] == doctest::Approx(0.0));
  CHECK(d.P[1] == doctest::Approx(-1.0));

  // the embedded momentum reduces to the planar formula: spatial covariant
  // part equals P, time component equals s3 H
  suites::Sampler rng(74);
  const double m0 = 1.0, s3 = 0.5;
  double worst = 0.0, worst_h = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Vec2 v = rng.disk(0.9);
    const Vec2 vp = rng.box(1.0);
    const DixonMomentum dm = dixon_momentum(v, vp, m0, s3, conv);
    const Vec3 low = lower3(dm.P3, conv);
    worst = std::max({worst, std::abs(low[1] - dm.P[0]), std::abs(low[2] - dm.P[1])});
    const double H = hamiltonian_value(v, vp, m0 / s3, conv);
    worst_h = std::max(worst_h, std::abs(dm.P3[0] - s3 * H));
  }
  CHECK(worst < 1e-12);
  CHECK(worst_h < 1e-12);
}

TEST_CASE("momentum coincidence calibration") {
  CHECK(momentum_coincidence({0, 0}, {0, 0}, 1.0, 0.5, conv) == 0.0);
  CHECK_THROWS_AS(momentum_coincidence({0, 0}, {0, 0}, 1.0, 0.0, conv), ZeroSpin);

  suites::Sampler rng(75);
  const double m0 = 1.0, s3 = 0.5;

  // exactly one (sigma, sgn_g) combination closes the identity
  int closing = 0;
  for (double sigma : {+1.0, -1.0})
    for (int sg : {+1, -1}) {
      Convention c2 = conv;
      c2.sgn_g = sg;
      suites::Sampler local(75);
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
        CHECK(sigma == kCoincidenceSign);
        CHECK(sg == +1);
      }
    }
  CHECK(closing == 1);

  // the recorded sign through the public check
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i)
    worst = std::max(worst, momentum_coincidence(rng.disk(0.9), rng.box(1.0), m0, s3, conv));
  CHECK(worst < 1e-10);

  // breaking the mass relation breaks the identification
  const Vec2 v{0.4, 0.2}, vp{0.3, -0.7};
  const Cov2 P = dixon_momentum(v, vp, m0, s3, conv).P;
  const Momenta wrong = momenta(v, vp, 1.2 * m0 / s3, conv);
  CHECK(norm2e(P - (kCoincidenceSign * s3) * wrong.p) > 1e-3);
}

TEST_CASE("spin side along an integrated solution") {
  const double mu = 1.0, m0 = 1.0;
  const ProperTrajectory ptraj = demo_solution(mu);

  double aud = 0.0, au = 0.0, plane = 0.0, balance = 0.0;
  for (std::size_t i = 0; i < ptraj.samples.size(); i += 100) {
    const ProperJet& pj = ptraj.samples[i];
    const SpinState st = pirani_spin_from_motion(pj, m0, mu, conv);
    aud = std::max(aud, std::abs(dot(st.a, pj.ud, conv)));
    au = std::max(au, std::abs(dot(st.a, pj.u, conv) + m0 / mu));
    plane = std::max(plane, plane_consistency(pj, st, conv));
    balance = std::max(balance, mathisson_residual(pj, st, conv));
  }
  CHECK(aud < 1e-8);
  CHECK(au < 1e-8);
  CHECK(plane < 1e-10);
  CHECK(balance < 1e-8);

  const DixonResiduals dr = dixon_residuals(ptraj, m0, mu, conv);
  CHECK(dr.momentum_drift < 1e-5);
  CHECK(dr.spin_equation < 1e-5);
}

TEST_CASE("rest trajectory has zero Dixon residuals") {
  const Trajectory traj =
      integrate_worldline({0, 0}, {0, 0}, {0, 0}, 1.0, 0.0, 2.0, 1e-2, Method::rk4, conv);
  const DixonResiduals dr = dixon_residuals(to_proper_time(traj, conv), 1.0, 1.0, conv);
  CHECK(dr.momentum_drift == 0.0);
  CHECK(dr.spin_equation == 0.0);
}

TEST_CASE("non-solutions fail the spin evolution law") {
  // straight worldline whose jets claim a curvature it does not have
  ProperTrajectory fake;
  fake.mu = 1.0;
  for (int i = 0; i <= 100; ++i) {
    Jet jet;
    jet.t = i * 2e-2;
    jet.x = {0.3 * jet.t, 0.0};
    jet.v = {0.3, 0.0};
    jet.vp = {0.0, 0.5};
    jet.vpp = {0.0, 0.0};
    fake.samples.push_back(to_proper_jet(jet, jet.t * std::sqrt(0.91), conv));
  }
  const DixonResiduals dr = dixon_residuals(fake, 1.0, 1.0, conv);
  CHECK(dr.spin_equation > 1e-2);
}

TEST_CASE("plane consistency is contentful off the supplementary condition") {
  ProperJet pj;
  pj.u = {1, 0, 0};
  pj.udd = {0, 0.4, -0.2};
  SpinState st;
  st.a = {0, 0.0, 1.0};  // transverse spin dual: violates the condition
  st.S = undual_spin(st.a, conv);
  st.m0 = 1.0;
  CHECK(plane_consistency(pj, st, conv) > 1e-3);
}
