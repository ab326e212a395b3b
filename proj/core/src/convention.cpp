#include "relspin/convention.hpp"

#include <nlohmann/json.hpp>

namespace relspin {

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Mat2 operator*(double s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = s * a(i, j);
  return r;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

void Convention::validate() const {
  if (metric_diag[0] != 1.0 || metric_diag[1] != -1.0 || metric_diag[2] != -1.0)
    throw ConfigError("metric_diag must be (+1,-1,-1)");
  if (eps2 != 1 && eps2 != -1) throw ConfigError("eps2 must be +1 or -1");
  if (eps3 != 1 && eps3 != -1) throw ConfigError("eps3 must be +1 or -1");
  if (sgn_g != 1 && sgn_g != -1) throw ConfigError("sgn_g must be +1 or -1");
}

std::string Convention::to_json() const {
  nlohmann::ordered_json j;
  j["metric"] = {static_cast<int>(metric_diag[0]), static_cast<int>(metric_diag[1]),
                 static_cast<int>(metric_diag[2])};
  j["eps2"] = eps2;
  j["eps3"] = eps3;
  j["sgn_g"] = sgn_g;
  return j.dump();
}

Convention Convention::from_json(const std::string& text) {
  Convention conv;
  try {
    auto j = nlohmann::json::parse(text);
    if (j.contains("metric")) {
      auto m = j.at("metric");
      if (!m.is_array() || m.size() != 3) throw ConfigError("metric must have 3 entries");
      for (int i = 0; i < 3; ++i) conv.metric_diag[i] = m.at(i).get<double>();
    }
    conv.eps2 = j.value("eps2", 1);
    conv.eps3 = j.value("eps3", 1);
    conv.sgn_g = j.value("sgn_g", 1);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("convention parse failure: ") + e.what());
  }
  conv.validate();
  return conv;
}

double dot(Vec2 a, Vec2 b, const Convention& conv) {
  return conv.metric_diag[1] * a[0] * b[0] + conv.metric_diag[2] * a[1] * b[1];
}

double dot(Vec3 a, Vec3 b, const Convention& conv) {
  return conv.metric_diag[0] * a[0] * b[0] + conv.metric_diag[1] * a[1] * b[1] +
         conv.metric_diag[2] * a[2] * b[2];
}

double pair(Cov2 w, Vec2 v) { return w[0] * v[0] + w[1] * v[1]; }

Cov2 lower(Vec2 v, const Convention& conv) {
  return {conv.metric_diag[1] * v[0], conv.metric_diag[2] * v[1]};
}

Vec2 raise(Cov2 w, const Convention& conv) {
  // inverse metric has the same diagonal entries for unit signs
  return {w[0] / conv.metric_diag[1], w[1] / conv.metric_diag[2]};
}

Vec3 lower3(Vec3 u, const Convention& conv) {
  return {conv.metric_diag[0] * u[0], conv.metric_diag[1] * u[1],
          conv.metric_diag[2] * u[2]};
}

Vec3 raise3(Vec3 w, const Convention& conv) {
  return {w[0] / conv.metric_diag[0], w[1] / conv.metric_diag[1],
          w[2] / conv.metric_diag[2]};
}

Cov2 star(Vec2 w, const Convention& conv) {
  const double e = conv.eps2;
  // (*w)_1 = eps_21 w^2, (*w)_2 = eps_12 w^1
  return {-e * w[1], e * w[0]};
}

Vec2 unstar(Cov2 w, const Convention& conv) {
  const double e = conv.eps2;
  return {e * w[1], -e * w[0]};
}

double wedge(Vec2 a, Vec2 b, const Convention& conv) {
  return conv.eps2 * (a[0] * b[1] - a[1] * b[0]);
}

namespace {

// eps_{ijk} with eps_{012} = +1
constexpr double eps3_sym(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  // parity of the permutation (i j k) of (0 1 2)
  return ((j - i) * (k - j) * (k - i) > 0) ? 1.0 : -1.0;
}

}  // namespace

Vec3 cross(Vec3 a, Vec3 b, const Convention& conv) {
  Vec3 cov{};
  for (int mu = 0; mu < 3; ++mu) {
    double s = 0.0;
    for (int nu = 0; nu < 3; ++nu)
      for (int lam = 0; lam < 3; ++lam)
        s += eps3_sym(mu, nu, lam) * a[nu] * b[lam];
    cov[mu] = conv.eps3 * s;
  }
  return raise3(cov, conv);
}

double bivector_inner(Vec2 a, Vec2 b, Vec2 c, Vec2 d, const Convention& conv) {
  return dot(a, c, conv) * dot(b, d, conv) - dot(a, d, conv) * dot(b, c, conv);
}

double bivector_inner(Vec3 a, Vec3 b, Vec3 c, Vec3 d, const Convention& conv) {
  return dot(a, c, conv) * dot(b, d, conv) - dot(a, d, conv) * dot(b, c, conv);
}

double lorentz_factor(Vec2 v, const Convention& conv) {
  const double r = 1.0 + dot(v, v, conv);
  if (r <= 0.0) throw SuperluminalVelocity();
  return std::sqrt(r);
}

double det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Mat2 inverse(const Mat2& m) {
  const double d = det(m);
  if (std::abs(d) < 1e-300) throw SingularJacobian();
  Mat2 r;
  r(0, 0) = m(1, 1) / d;
  r(0, 1) = -m(0, 1) / d;
  r(1, 0) = -m(1, 0) / d;
  r(1, 1) = m(0, 0) / d;
  return r;
}

Vec2 mul(const Mat2& m, Vec2 v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

Cov2 mul_cov(const Mat2& m, Vec2 v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

}  // namespace relspin
