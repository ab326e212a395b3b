#include "relspin/equation.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace relspin {

std::string method_name(Method m) { return m == Method::rk4 ? "rk4" : "dopri"; }

Method method_from_name(const std::string& name) {
  if (name == "rk4") return Method::rk4;
  if (name == "dopri") return Method::dopri;
  throw ConfigError("unknown integrator method: " + name);
}

Cov2 residual_ep(const Jet& jet, double mu, const Convention& conv) {
  const Vec2 v = jet.v, vp = jet.vp, vpp = jet.vpp;
  const double W = lorentz_factor(v, conv);
  const double W2 = W * W, W3 = W2 * W, W5 = W3 * W2;
  const double vvp = dot(v, vp, conv);
  const Cov2 sp = star(vp, conv);
  const Cov2 spp = star(vpp, conv);
  const Cov2 vl = lower(v, conv);
  const Cov2 vpl = lower(vp, conv);
  Cov2 r;
  for (int a = 0; a < 2; ++a)
    r[a] = -spp[a] / W3 + 3.0 * sp[a] * vvp / W5 +
           mu * (W2 * vpl[a] - vvp * vl[a]) / W3;
  return r;
}

Vec2 solve_jerk(Vec2 v, Vec2 vp, double mu, const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  const double W2 = W * W, W3 = W2 * W, W5 = W3 * W2;
  const double vvp = dot(v, vp, conv);
  const Cov2 sp = star(vp, conv);
  const Cov2 vl = lower(v, conv);
  const Cov2 vpl = lower(vp, conv);
  // residual = -(*v'')/W^3 + k(v, v'); solve (*v'') = W^3 k.
  Cov2 k;
  for (int a = 0; a < 2; ++a)
    k[a] = 3.0 * sp[a] * vvp / W5 + mu * (W2 * vpl[a] - vvp * vl[a]) / W3;
  return unstar({W3 * k[0], W3 * k[1]}, conv);
}

namespace {

using State6 = std::array<double, 6>;

State6 deriv(const State6& y, double mu, const Convention& conv) {
  const Vec2 v{y[2], y[3]}, vp{y[4], y[5]};
  const Vec2 j = solve_jerk(v, vp, mu, conv);
  return {v[0], v[1], vp[0], vp[1], j[0], j[1]};
}

State6 axpy(const State6& y, double h, const State6& d) {
  State6 r;
  for (int i = 0; i < 6; ++i) r[i] = y[i] + h * d[i];
  return r;
}

State6 rk4_step(const State6& y, double h, double mu, const Convention& conv) {
  const State6 k1 = deriv(y, mu, conv);
  const State6 k2 = deriv(axpy(y, 0.5 * h, k1), mu, conv);
  const State6 k3 = deriv(axpy(y, 0.5 * h, k2), mu, conv);
  const State6 k4 = deriv(axpy(y, h, k3), mu, conv);
  State6 r;
  for (int i = 0; i < 6; ++i)
    r[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return r;
}

// Dormand-Prince 5(4) embedded pair.
struct DopriTableau {
  static constexpr double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
  static constexpr double a[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static constexpr double b5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                                   -2187.0 / 6784, 11.0 / 84, 0.0};
  static constexpr double b4[7] = {5179.0 / 57600,  0.0,       7571.0 / 16695,
                                   393.0 / 640,     -92097.0 / 339200,
                                   187.0 / 2100,    1.0 / 40};
};

}  // namespace

Trajectory integrate_worldline(Vec2 x0, Vec2 v0, Vec2 vp0, double mu, double t0,
                               double t1, double step, Method method,
                               const Convention& conv) {
  if (!(step > 0.0)) throw ConfigError("step must be positive");
  if (!(t1 > t0)) throw ConfigError("t_span must satisfy t1 > t0");
  lorentz_factor(v0, conv);  // admissible initial data

  Trajectory traj;
  traj.method = method;
  traj.step = step;
  traj.mu = mu;

  auto push = [&](double t, const State6& y) {
    Jet jet;
    jet.t = t;
    jet.x = {y[0], y[1]};
    jet.v = {y[2], y[3]};
    jet.vp = {y[4], y[5]};
    jet.vpp = solve_jerk(jet.v, jet.vp, mu, conv);
    traj.samples.push_back(jet);
  };

  State6 y{x0[0], x0[1], v0[0], v0[1], vp0[0], vp0[1]};
  double t = t0;
  push(t, y);

  if (method == Method::rk4) {
    const long n = std::lround((t1 - t0) / step);
    for (long i = 1; i <= n; ++i) {
      y = rk4_step(y, step, mu, conv);
      t = t0 + static_cast<double>(i) * step;
      push(t, y);
    }
    return traj;
  }

  // adaptive embedded pair; `step` is the initial try and the dense output spacing
  const double atol = 1e-10, rtol = 1e-10, hmin = 1e-12;
  double h = step;
  double t_next_sample = t0 + step;
  while (t < t1 - 1e-14) {
    h = std::min(h, t1 - t);
    std::array<State6, 7> k;
    k[0] = deriv(y, mu, conv);
    bool accepted = false;
    State6 y5{};
    double err = 0.0;
    while (!accepted) {
      for (int s = 1; s < 7; ++s) {
        State6 ys = y;
        for (int j = 0; j < s; ++j)
          for (int i = 0; i < 6; ++i) ys[i] += h * DopriTableau::a[s][j] * k[j][i];
        k[s] = deriv(ys, mu, conv);
      }
      err = 0.0;
      State6 y4{};
      for (int i = 0; i < 6; ++i) {
        double s5 = 0.0, s4 = 0.0;
        for (int s = 0; s < 7; ++s) {
          s5 += DopriTableau::b5[s] * k[s][i];
          s4 += DopriTableau::b4[s] * k[s][i];
        }
        y5[i] = y[i] + h * s5;
        y4[i] = y[i] + h * s4;
        const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
        const double e = (y5[i] - y4[i]) / sc;
        err += e * e;
      }
      err = std::sqrt(err / 6.0);
      if (err <= 1.0) {
        accepted = true;
      } else {
        h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        if (h < hmin) throw StepUnderflow();
      }
    }
    t += h;
    y = y5;
    if (t >= t_next_sample - 1e-12 || t >= t1 - 1e-14) {
      push(t, y);
      t_next_sample += step;
    }
    h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-16), -0.2)));
  }
  return traj;
}

ProperJet to_proper_jet(const Jet& jet, double tau, const Convention& conv) {
  const Vec2 v = jet.v, vp = jet.vp, vpp = jet.vpp;
  const double W = lorentz_factor(v, conv);
  const double W2 = W * W, W3 = W2 * W, W4 = W2 * W2, W5 = W4 * W, W7 = W5 * W2;
  const double vvp = dot(v, vp, conv);
  const double q = dot(vp, vp, conv) + dot(v, vpp, conv);

  ProperJet pj;
  pj.tau = tau;
  pj.x = {jet.t, jet.x[0], jet.x[1]};
  pj.u = {1.0 / W, v[0] / W, v[1] / W};
  // ud = (0,v')/W^2 - (1,v)(v.v')/W^4
  // udd = (0,v'')/W^3 - 3(0,v')(v.v')/W^5 - (1,v)(v'.v' + v.v'')/W^5 + 4(1,v)(v.v')^2/W^7
  const Vec3 e{1.0, v[0], v[1]};
  const Vec3 d1{0.0, vp[0], vp[1]};
  const Vec3 d2{0.0, vpp[0], vpp[1]};
  pj.ud = (1.0 / W2) * d1 - (vvp / W4) * e;
  pj.udd = (1.0 / W3) * d2 - (3.0 * vvp / W5) * d1 - (q / W5) * e +
           (4.0 * vvp * vvp / W7) * e;
  return pj;
}

ProperTrajectory to_proper_time(const Trajectory& traj, const Convention& conv) {
  ProperTrajectory out;
  out.mu = traj.mu;
  out.samples.reserve(traj.samples.size());
  double tau = 0.0;
  double w_prev = 0.0, t_prev = 0.0;
  bool first = true;
  for (const Jet& jet : traj.samples) {
    const double w = lorentz_factor(jet.v, conv);
    if (!first) tau += 0.5 * (w_prev + w) * (jet.t - t_prev);
    out.samples.push_back(to_proper_jet(jet, tau, conv));
    w_prev = w;
    t_prev = jet.t;
    first = false;
  }
  return out;
}

Vec3 residual_proper(const ProperJet& pjet, double mu, const Convention& conv) {
  return cross(pjet.udd, pjet.u, conv) + mu * pjet.ud;
}

double curvature(const ProperJet& pjet, const Convention& conv) {
  const double r = -dot(pjet.ud, pjet.ud, conv);
  if (r < -1e-9) throw NegativeRadicand("ud is not spacelike: broken proper jet");
  return std::sqrt(std::max(r, 0.0));
}

}  // namespace relspin
