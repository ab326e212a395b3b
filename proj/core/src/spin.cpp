#include "relspin/spin.hpp"

#include <algorithm>
#include <cmath>

namespace relspin {

namespace {

constexpr double eps_sym(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i) * (k - j) * (k - i) > 0) ? 1.0 : -1.0;
}

double max_abs(const Mat3& m) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

}  // namespace

Vec3 dual_spin(const Mat3& S, const Convention& conv) {
  double scale = max_abs(S);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(S(i, j) + S(j, i)) > 1e-12 * std::max(1.0, scale))
        throw NotSkew();
  Vec3 a_cov{};
  for (int mu = 0; mu < 3; ++mu) {
    double s = 0.0;
    for (int nu = 0; nu < 3; ++nu)
      for (int lam = 0; lam < 3; ++lam)
        s += eps_sym(nu, lam, mu) * S(nu, lam);
    a_cov[mu] = 0.5 * conv.eps3 * s;
  }
  return raise3(a_cov, conv);
}

Mat3 undual_spin(Vec3 a, const Convention& conv) {
  const Vec3 al = lower3(a, conv);
  Mat3 S;
  for (int nu = 0; nu < 3; ++nu)
    for (int lam = 0; lam < 3; ++lam) {
      double s = 0.0;
      for (int mu = 0; mu < 3; ++mu) s += eps_sym(nu, lam, mu) * al[mu];
      S(nu, lam) = conv.eps3 * s;
    }
  return S;
}

double pirani_check(const Mat3& S, Vec3 u, const Convention& conv) {
  const Vec3 ul = lower3(u, conv);
  Vec3 w{};
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu) w[mu] += S(mu, nu) * ul[nu];
  const Vec3 axu = cross(dual_spin(S, conv), u, conv);
  return std::max(norm3e(w), norm3e(axu));
}

double mass_renormalization(double m0, double s3) {
  if (s3 == 0.0) throw ZeroSpin();
  return m0 / s3;
}

SpinState pirani_spin_from_motion(const ProperJet& pjet, double m0, double mu,
                                  const Convention& conv) {
  if (mu == 0.0) throw ZeroMu();
  SpinState st;
  st.m0 = m0;
  st.a = (-m0 / mu) * pjet.u;
  st.S = undual_spin(st.a, conv);
  st.s3 = -dot(st.a, pjet.u, conv);
  return st;
}

DixonMomentum dixon_momentum(Vec2 v, Vec2 vp, double m0, double s3,
                             const Convention& conv) {
  const double W = lorentz_factor(v, conv);
  const double W3 = W * W * W;
  const Cov2 sp = star(vp, conv);
  const Cov2 vl = lower(v, conv);
  DixonMomentum dm;
  for (int a = 0; a < 2; ++a)
    dm.P[a] = m0 * vl[a] / W - conv.sgn_g * s3 * sp[a] / W3;

  Jet jet;
  jet.v = v;
  jet.vp = vp;
  const ProperJet pj = to_proper_jet(jet, 0.0, conv);
  dm.P3 = m0 * pj.u + (conv.sgn_g * s3) * cross(pj.ud, pj.u, conv);
  return dm;
}

double momentum_coincidence(Vec2 v, Vec2 vp, double m0, double s3,
                            const Convention& conv) {
  const double mu = mass_renormalization(m0, s3);
  const Cov2 p = [&] {
    const double W = lorentz_factor(v, conv);
    const double W3 = W * W * W;
    const Cov2 sp = star(vp, conv);
    const Cov2 vl = lower(v, conv);
    return Cov2{sp[0] / W3 - mu * vl[0] / W, sp[1] / W3 - mu * vl[1] / W};
  }();
  const Cov2 P = dixon_momentum(v, vp, m0, s3, conv).P;
  const Cov2 diff = P - (kCoincidenceSign * s3) * p;
  return norm2e(diff);
}

DixonResiduals dixon_residuals(const ProperTrajectory& traj, double m0, double mu,
                               const Convention& conv) {
  DixonResiduals out;
  if (traj.samples.size() < 3) return out;
  if (mu == 0.0) throw ZeroMu();
  const double s3 = m0 / mu;

  auto p3_at = [&](const ProperJet& pj) {
    return m0 * pj.u + (conv.sgn_g * s3) * cross(pj.ud, pj.u, conv);
  };
  const Vec3 P0 = p3_at(traj.samples.front());

  for (const ProperJet& pj : traj.samples)
    out.momentum_drift = std::max(out.momentum_drift, norm3e(p3_at(pj) - P0));

  for (std::size_t i = 1; i + 1 < traj.samples.size(); ++i) {
    const ProperJet& prev = traj.samples[i - 1];
    const ProperJet& next = traj.samples[i + 1];
    const ProperJet& here = traj.samples[i];
    const double dtau = next.tau - prev.tau;
    const Mat3 Sp = pirani_spin_from_motion(prev, m0, mu, conv).S;
    const Mat3 Sn = pirani_spin_from_motion(next, m0, mu, conv).S;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const double dS = (Sn(a, b) - Sp(a, b)) / dtau;
        const double rhs = P0[a] * here.u[b] - P0[b] * here.u[a];
        out.spin_equation = std::max(out.spin_equation, std::abs(dS - rhs));
      }
  }
  return out;
}

double mathisson_residual(const ProperJet& pjet, const SpinState& spin,
                          const Convention& conv) {
  return norm3e(spin.m0 * pjet.ud + cross(spin.a, pjet.udd, conv));
}

double plane_consistency(const ProperJet& pjet, const SpinState& spin,
                         const Convention& conv) {
  const Vec3 axu = cross(spin.a, pjet.u, conv);
  return std::abs(dot(axu, pjet.udd, conv));
}

}  // namespace relspin
