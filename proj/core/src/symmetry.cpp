#include "relspin/symmetry.hpp"

#include <algorithm>
#include <cmath>

#include "relspin/fd.hpp"

namespace relspin {

namespace {

// Rotation generator as a matrix on contravariant components.
Mat2 rotation_matrix(double omega) {
  Mat2 om;
  om(0, 1) = -omega;
  om(1, 0) = omega;
  return om;
}

Mat2 outer_cov(Cov2 w, Cov2 p) {
  Mat2 r;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r(a, b) = w[a] * p[b];
  return r;
}

double max_abs(const Mat2& m) {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

double max_abs(Cov2 v) { return std::max(std::abs(v[0]), std::abs(v[1])); }

struct FieldsAt {
  Mat2 A, B, Ainv, Aprime;
  Cov2 c, k;
  double t = 0.0;
  Vec2 x{};
};

Mat2 eval_A(const CoefficientField& cf, const FieldsAt& f, Vec2 v) {
  return cf.A(f.t, f.x, v);
}

// directional derivative of A in v along dir
Mat2 dA(const CoefficientField& cf, const FieldsAt& f, Vec2 v, Vec2 dir) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto line = [&](double s) { return eval_A(cf, f, v + s * dir)(i, j); };
      r(i, j) = fd::d1(line, fd::kStep1);
    }
  return r;
}

Mat2 dB(const CoefficientField& cf, const FieldsAt& f, Vec2 v, Vec2 dir) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto line = [&](double s) { return cf.B(f.t, f.x, v + s * dir)(i, j); };
      r(i, j) = fd::d1(line, fd::kStep1);
    }
  return r;
}

Cov2 dc(const CoefficientField& cf, const FieldsAt& f, Vec2 v, Vec2 dir) {
  Cov2 r;
  for (int i = 0; i < 2; ++i) {
    auto line = [&](double s) { return cf.c(f.t, f.x, v + s * dir)[i]; };
    r[i] = fd::d1(line, fd::kStep1);
  }
  return r;
}

// mixed second directional derivative (u.d_v)(w.d_v) A
Mat2 d2A(const CoefficientField& cf, const FieldsAt& f, Vec2 v, Vec2 u, Vec2 w) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto g = [&](double su, double sw) {
        return eval_A(cf, f, v + su * u + sw * w)(i, j);
      };
      r(i, j) = fd::d2_mixed2(g, 4e-4);
    }
  return r;
}

FieldsAt fields_at(const CoefficientField& cf, Vec2 v, Vec2 vp) {
  FieldsAt f;
  f.A = cf.A(f.t, f.x, v);
  f.B = cf.B(f.t, f.x, v);
  f.c = cf.c(f.t, f.x, v);
  if (std::abs(det(f.A)) < 1e-14) throw SingularA();
  f.Ainv = inverse(f.A);
  f.Aprime = dA(cf, f, v, vp);
  f.k = mul_cov(f.Aprime, vp) + mul_cov(f.B, vp) + f.c;
  return f;
}

Vec2 as_vec(Cov2 w) { return {w[0], w[1]}; }  // reinterpret components

// M A^{-1} w for a covariant column w: raise through A^{-1}, then apply M.
Cov2 through_Ainv(const Mat2& M, const Mat2& Ainv, Cov2 w) {
  return mul_cov(M, mul(Ainv, as_vec(w)));
}

}  // namespace

Multipliers multipliers(const CoefficientField& cf, Vec2 v, Vec2 vp,
                        const PoincareGen& gen, const Convention& conv) {
  const FieldsAt f = fields_at(cf, v, vp);
  const Vec2 pi = gen.piv;
  const Cov2 pil = lower(pi, conv);
  const double piv = dot(pi, v, conv);
  const double pivp = dot(pi, vp, conv);
  const Mat2 Om = rotation_matrix(gen.omega);

  // first prolongation direction xi = pi + (pi.v) v + Om v
  const Vec2 xi1 = pi + piv * v + mul(Om, v);

  const Mat2 XA = dA(cf, f, v, xi1);
  const Mat2 phi_raw =
      XA + 2.0 * piv * f.A + outer_cov(mul_cov(f.A, v), pil) + f.A * Om;

  Multipliers m;
  m.Phi = phi_raw * f.Ainv;
  m.Xi = -1.0 * outer_cov(f.k, pil);
  m.Pi = pivp * f.A + 2.0 * outer_cov(mul_cov(f.A, vp), pil);
  return m;
}

Cov2 invariance_condition_residual(const CoefficientField& cf, Vec2 v, Vec2 vp,
                                   const PoincareGen& gen, const Convention& conv) {
  const FieldsAt f = fields_at(cf, v, vp);
  const Vec2 pi = gen.piv;
  const double piv = dot(pi, v, conv);
  const double pivp = dot(pi, vp, conv);
  const Mat2 Om = rotation_matrix(gen.omega);
  const Vec2 xi1 = pi + piv * v + mul(Om, v);
  const Vec2 xi2 = pivp * v + 2.0 * piv * vp + mul(Om, vp);

  auto k_at = [&](Vec2 vv, Vec2 vpv) {
    const Mat2 Ap = dA(cf, f, vv, vpv);
    return mul_cov(Ap, vpv) + mul_cov(cf.B(f.t, f.x, vv), vpv) + cf.c(f.t, f.x, vv);
  };

  // X(k) = (xi1 . d_v) k + (xi2 . d_v') k; the outer step is wide because the
  // line function itself carries inner finite-difference noise
  Cov2 Xk;
  for (int i = 0; i < 2; ++i) {
    auto line = [&](double s) { return k_at(v + s * xi1, vp + s * xi2)[i]; };
    Xk[i] = fd::d1(line, 1e-3);
  }

  const Multipliers m = multipliers(cf, v, vp, gen, conv);
  const Cov2 rhs = mul_cov(m.Phi, as_vec(f.k)) - mul_cov(m.Xi, v) - mul_cov(m.Pi, vp);
  return Xk - rhs;
}

const std::array<const char*, 6>& InvarianceResiduals::names() {
  static const std::array<const char*, 6> n{"14", "15", "16", "17", "18", "19"};
  return n;
}

double InvarianceResiduals::max() const {
  return *std::max_element(r.begin(), r.end());
}

InvarianceResiduals invariance_residuals(const CoefficientField& cf, Vec2 v,
                                         Vec2 vp, const PoincareGen& gen,
                                         const Convention& conv) {
  const FieldsAt f = fields_at(cf, v, vp);
  const Vec2 pi = gen.piv;
  const Cov2 pil = lower(pi, conv);
  const double piv = dot(pi, v, conv);
  const double pivp = dot(pi, vp, conv);
  const Mat2 Om = rotation_matrix(gen.omega);
  const Vec2 Omv = mul(Om, v);
  const Vec2 Omvp = mul(Om, vp);
  const Vec2 xipi = pi + piv * v;  // boost part of the first prolongation

  InvarianceResiduals out;

  // rotation sector ------------------------------------------------------
  const Mat2 dA_Omv = dA(cf, f, v, Omv);
  const Mat2 rot_raw = dA_Omv + f.A * Om;  // Phi A for the pure rotation

  {  // (14): quadratic in v'
    const Cov2 lhs = mul_cov(d2A(cf, f, v, Omv, vp), vp) +
                     mul_cov(dA(cf, f, v, Omvp), vp) + mul_cov(f.Aprime, Omvp);
    const Cov2 rhs = through_Ainv(rot_raw, f.Ainv, mul_cov(f.Aprime, vp));
    out.r[0] = max_abs(lhs - rhs);
  }
  {  // (15): linear in v', stripped to a matrix identity
    const Mat2 lhs = dB(cf, f, v, Omv) + f.B * Om;
    const Mat2 rhs = rot_raw * f.Ainv * f.B;
    out.r[1] = max_abs(lhs - rhs);
  }
  {  // (16): v'-free
    const Cov2 lhs = dc(cf, f, v, Omv);
    const Cov2 rhs = through_Ainv(rot_raw, f.Ainv, f.c);
    out.r[2] = max_abs(lhs - rhs);
  }

  // boost sector ---------------------------------------------------------
  const Mat2 dA_xipi = dA(cf, f, v, xipi);
  const Mat2 boost_raw =
      dA_xipi + 2.0 * piv * f.A + outer_cov(mul_cov(f.A, v), pil);

  {  // (17): quadratic in v'
    const Cov2 Apvp = mul_cov(f.Aprime, vp);
    const Vec2 AinvApvp = mul(f.Ainv, as_vec(Apvp));
    const Cov2 lhs = mul_cov(d2A(cf, f, v, xipi, vp), vp) +
                     pivp * mul_cov(dA(cf, f, v, v), vp) +
                     pivp * mul_cov(f.Aprime, v) + 4.0 * piv * Apvp;
    const Cov2 rhs = through_Ainv(dA_xipi, f.Ainv, Apvp) + 3.0 * piv * Apvp +
                     dot(pi, AinvApvp, conv) * mul_cov(f.A, v) -
                     3.0 * pivp * mul_cov(f.A, vp);
    out.r[3] = max_abs(lhs - rhs);
  }
  {  // (18): linear in v'
    const Mat2 lhs = dB(cf, f, v, xipi) + outer_cov(mul_cov(f.B, v), pil) + piv * f.B;
    const Mat2 rhs = boost_raw * f.Ainv * f.B;
    out.r[4] = max_abs(lhs - rhs);
  }
  {  // (19): v'-free
    const Vec2 Ainvc = mul(f.Ainv, as_vec(f.c));
    const Cov2 lhs = dc(cf, f, v, xipi);
    const Cov2 rhs = through_Ainv(dA_xipi, f.Ainv, f.c) + 3.0 * piv * f.c +
                     dot(pi, Ainvc, conv) * mul_cov(f.A, v);
    out.r[5] = max_abs(lhs - rhs);
  }

  return out;
}

namespace {

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Vec3 mat3_apply(const Mat3& m, Vec3 v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return r;
}

Mat3 mat3_identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r(i, i) = 1.0;
  return r;
}

// scaling-and-squaring Taylor exponential; generators at desk scale are tame
Mat3 mat3_exp(const Mat3& g) {
  double norm = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) norm = std::max(norm, std::abs(g(i, j)));
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  Mat3 gs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gs(i, j) = g(i, j) * scale;

  Mat3 result = mat3_identity();
  Mat3 term = mat3_identity();
  for (int n = 1; n <= 16; ++n) {
    term = mat3_mul(term, gs);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        term(i, j) /= static_cast<double>(n);
        result(i, j) += term(i, j);
      }
  }
  for (int s = 0; s < squarings; ++s) result = mat3_mul(result, result);
  return result;
}

}  // namespace

Mat3 lorentz_matrix(const PoincareGen& gen, double lambda, const Convention& conv) {
  (void)conv;
  Mat3 g;
  g(0, 1) = gen.piv[0];
  g(0, 2) = gen.piv[1];
  g(1, 0) = gen.piv[0];
  g(2, 0) = gen.piv[1];
  g(1, 2) = -gen.omega;
  g(2, 1) = gen.omega;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) *= lambda;
  return mat3_exp(g);
}

Jet lorentz_transform_jet(const Jet& jet, const PoincareGen& gen, double lambda,
                          const Convention& conv) {
  const Mat3 L = lorentz_matrix(gen, lambda, conv);
  const Vec3 event{jet.t, jet.x[0], jet.x[1]};
  const Vec3 ev = mat3_apply(L, event) + lambda * gen.translations;

  // dt'/dt and the images of the velocity ladder
  const Vec3 d1 = mat3_apply(L, {1.0, jet.v[0], jet.v[1]});
  const Vec3 d2 = mat3_apply(L, {0.0, jet.vp[0], jet.vp[1]});
  const Vec3 d3 = mat3_apply(L, {0.0, jet.vpp[0], jet.vpp[1]});
  const double T1 = d1[0], T2 = d2[0], T3 = d3[0];
  if (T1 <= 0.0) throw SuperluminalVelocity("boost past the light cone");
  const Vec2 w{d1[1], d1[2]}, w2{d2[1], d2[2]}, w3{d3[1], d3[2]};

  const double T1_2 = T1 * T1, T1_3 = T1_2 * T1, T1_4 = T1_3 * T1, T1_5 = T1_4 * T1;
  Jet out;
  out.t = ev[0];
  out.x = {ev[1], ev[2]};
  out.v = (1.0 / T1) * w;
  out.vp = (1.0 / T1_2) * w2 - (T2 / T1_3) * w;
  out.vpp = (1.0 / T1_3) * w3 - (3.0 * T2 / T1_4) * w2 - (T3 / T1_4) * w +
            (3.0 * T2 * T2 / T1_5) * w;
  lorentz_factor(out.v, conv);  // validates subluminality
  return out;
}

}  // namespace relspin
