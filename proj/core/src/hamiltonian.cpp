#include "relspin/hamiltonian.hpp"

#include <array>
#include <cmath>
#include <optional>

namespace relspin {

Momenta momenta(Vec2 v, Vec2 vp, double mu, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  const double W3 = W * W * W;
  const Cov2 sp = star(vp, conv);
  const Cov2 vl = lower(v, conv);
  const double D1 = 1.0 + vl[0] * v[0];  // 1 - (v^1)^2
  const double D2 = 1.0 + vl[1] * v[1];
  if (std::abs(D1) < 1e-14 || std::abs(D2) < 1e-14) throw DegenerateDenominator();
  Momenta m;
  for (int a = 0; a < 2; ++a) m.p[a] = sp[a] / W3 - mu * vl[a] / W;
  m.pp[0] = v[1] / (2.0 * W * D1);
  m.pp[1] = -v[0] / (2.0 * W * D2);
  return m;
}

double hamiltonian_value(Vec2 v, Vec2 vp, double mu, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  return wedge(vp, v, conv) / (W * W * W) + mu / W;
}

Mat2 dpp_dv(Vec2 v, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  const double W2 = W * W, W3 = W2 * W;
  const double D1 = 1.0 - v[0] * v[0];
  const double D2 = 1.0 - v[1] * v[1];
  Mat2 m;
  m(0, 0) = v[0] * v[1] * (D1 + 2.0 * W2) / (2.0 * W3 * D1 * D1);
  m(0, 1) = 1.0 / (2.0 * W3);
  m(1, 0) = -1.0 / (2.0 * W3);
  m(1, 1) = -v[0] * v[1] * (D2 + 2.0 * W2) / (2.0 * W3 * D2 * D2);
  return m;
}

JacobiBlock jacobi_block(Vec2 v, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  const double W2 = W * W, W3 = W2 * W;
  const double D1 = 1.0 - v[0] * v[0];
  const double D2 = 1.0 - v[1] * v[1];
  Mat2 bracket;
  bracket(0, 0) = -v[0] * v[1] * (D2 + 2.0 * W2) / (D2 * D2);
  bracket(0, 1) = -1.0;
  bracket(1, 0) = 1.0;
  bracket(1, 1) = v[0] * v[1] * (D1 + 2.0 * W2) / (D1 * D1);
  JacobiBlock jb;
  jb.delta = det(bracket);
  if (std::abs(jb.delta) < 1e-12) throw SingularJacobian();
  jb.dv_dpp = (2.0 * W3 / jb.delta) * bracket;
  return jb;
}

namespace {

Cov2 pp_of(Vec2 v, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  return {v[1] / (2.0 * W * (1.0 - v[0] * v[0])),
          -v[0] / (2.0 * W * (1.0 - v[1] * v[1]))};
}

double fnorm(Cov2 r) { return std::sqrt(r[0] * r[0] + r[1] * r[1]); }

std::optional<Vec2> newton_from(Vec2 guess, Cov2 target, const Convention& conv) {
  Vec2 v = guess;
  if (norm2e(v) > 0.95) v = (0.95 / norm2e(v)) * v;
  Cov2 F = pp_of(v, conv) - target;
  double fn = fnorm(F);
  for (int it = 0; it < 50; ++it) {
    if (fn < 1e-13) return v;
    Mat2 J = dpp_dv(v, conv);
    if (std::abs(det(J)) < 1e-14) return std::nullopt;
    const Mat2 Jinv = inverse(J);
    const Vec2 step{-(Jinv(0, 0) * F[0] + Jinv(0, 1) * F[1]),
                    -(Jinv(1, 0) * F[0] + Jinv(1, 1) * F[1])};
    double lam = 1.0;
    bool moved = false;
    for (int half = 0; half < 40; ++half) {
      const Vec2 trial = v + lam * step;
      if (norm2e(trial) < 0.999) {
        const Cov2 Ft = pp_of(trial, conv) - target;
        if (fnorm(Ft) < fn) {
          v = trial;
          F = Ft;
          fn = fnorm(Ft);
          moved = true;
          break;
        }
      }
      lam *= 0.5;
    }
    if (!moved) return std::nullopt;  // stalled (fold of the momentum map)
  }
  return fn < 1e-13 ? std::optional<Vec2>(v) : std::nullopt;
}

Vec2 invert_pp(Cov2 target, const Convention& conv,
               const std::optional<Vec2>& warm = std::nullopt) {
  if (warm) {
    if (auto v = newton_from(*warm, target, conv)) return *v;
  }
  // small-velocity linearization of the momentum map
  if (auto v = newton_from({-2.0 * target[1], 2.0 * target[0]}, target, conv))
    return *v;
  // deterministic multi-start over the velocity disk
  for (double r : {0.0, 0.3, 0.6, 0.85}) {
    for (int k = 0; k < (r == 0.0 ? 1 : 8); ++k) {
      const double phi = 2.0 * M_PI * k / 8.0;
      if (auto v = newton_from({r * std::cos(phi), r * std::sin(phi)}, target, conv))
        return *v;
    }
  }
  throw NewtonDivergence("first-order momentum outside the range of the map");
}

Vec2 vp_from(Cov2 p, Vec2 v, double mu, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  const double W2 = W * W, W3 = W2 * W;
  const Cov2 vl = lower(v, conv);
  return unstar({W3 * p[0] + mu * W2 * vl[0], W3 * p[1] + mu * W2 * vl[1]}, conv);
}

}  // namespace

LegendreInverse inverse_legendre(Cov2 p, Cov2 pp, double mu, const Convention& conv) {
  const Vec2 v = invert_pp(pp, conv);
  return {v, vp_from(p, v, mu, conv)};
}

CanonicalState legendre_transform(double t, Vec2 x, Vec2 v, Vec2 vp, double mu,
                                  const Convention& conv) {
  const Momenta m = momenta(v, vp, mu, conv);
  CanonicalState s;
  s.t = t;
  s.x = x;
  s.p = m.p;
  s.pp = m.pp;
  s.v = v;
  s.vp = vp;
  s.H = hamiltonian_value(v, vp, mu, conv);
  return s;
}

CanonicalTrajectory canonical_flow(const CanonicalState& state0, double mu,
                                   double t0, double t1, double step,
                                   const Convention& conv) {
  if (!(step > 0.0)) throw ConfigError("step must be positive");
  if (!(t1 > t0)) throw ConfigError("t_span must satisfy t1 > t0");

  const Cov2 p = state0.p;  // conserved exactly: held, never integrated
  using State4 = std::array<double, 4>;

  std::optional<Vec2> warm = std::nullopt;
  auto deriv = [&](const State4& y) {
    const Cov2 pp{y[2], y[3]};
    const Vec2 v = invert_pp(pp, conv, warm);
    warm = v;
    const Vec2 vp = vp_from(p, v, mu, conv);
    const Cov2 dpp = mul_cov(dpp_dv(v, conv), vp);
    return State4{v[0], v[1], dpp[0], dpp[1]};
  };

  CanonicalTrajectory traj;
  traj.step = step;
  traj.mu = mu;

  auto push = [&](double t, const State4& y) {
    CanonicalState s;
    s.t = t;
    s.x = {y[0], y[1]};
    s.p = p;
    s.pp = {y[2], y[3]};
    s.v = invert_pp(s.pp, conv, warm);
    warm = s.v;
    s.vp = vp_from(p, s.v, mu, conv);
    s.H = hamiltonian_value(s.v, s.vp, mu, conv);
    traj.samples.push_back(s);
  };

  State4 y{state0.x[0], state0.x[1], state0.pp[0], state0.pp[1]};
  push(t0, y);
  const long n = std::lround((t1 - t0) / step);
  for (long i = 1; i <= n; ++i) {
    const State4 k1 = deriv(y);
    State4 y2;
    for (int j = 0; j < 4; ++j) y2[j] = y[j] + 0.5 * step * k1[j];
    const State4 k2 = deriv(y2);
    State4 y3;
    for (int j = 0; j < 4; ++j) y3[j] = y[j] + 0.5 * step * k2[j];
    const State4 k3 = deriv(y3);
    State4 y4;
    for (int j = 0; j < 4; ++j) y4[j] = y[j] + step * k3[j];
    const State4 k4 = deriv(y4);
    for (int j = 0; j < 4; ++j)
      y[j] += step / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    push(t0 + static_cast<double>(i) * step, y);
  }
  return traj;
}

}  // namespace relspin
