#pragma once

#include <array>
#include <cmath>
#include <string>

#include "relspin/errors.hpp"

namespace relspin {

// Flat 2+1 space-time, signature (+,-,-), coordinates (x^0, x^1, x^2) = (t, x, y).
// Components are stored contravariant everywhere; covariant component arrays are
// produced by the metric inside operations and carried in the strong type Cov2,
// so that index position never has to be guessed at a call site.

/// Contravariant spatial 2-vector v^a, a = 1, 2.
struct Vec2 {
  double c[2]{0.0, 0.0};

  constexpr double& operator[](int i) { return c[i]; }
  constexpr double operator[](int i) const { return c[i]; }
};

/// Covariant spatial 2-vector w_a. Produced by metric lowering or the Hodge star.
struct Cov2 {
  double c[2]{0.0, 0.0};

  constexpr double& operator[](int i) { return c[i]; }
  constexpr double operator[](int i) const { return c[i]; }
};

/// Contravariant space-time 3-vector u^mu, mu = 0, 1, 2.
struct Vec3 {
  double c[3]{0.0, 0.0, 0.0};

  constexpr double& operator[](int i) { return c[i]; }
  constexpr double operator[](int i) const { return c[i]; }
};

/// Plain 2x2 real matrix. In the equation modules it maps contravariant columns
/// to covariant ones (the index picture of the leading coefficient A_ab).
struct Mat2 {
  double m[2][2]{{0.0, 0.0}, {0.0, 0.0}};

  constexpr double& operator()(int i, int j) { return m[i][j]; }
  constexpr double operator()(int i, int j) const { return m[i][j]; }
};

/// Plain 3x3 real matrix (spin tensors S^{mu nu}).
struct Mat3 {
  double m[3][3]{};

  constexpr double& operator()(int i, int j) { return m[i][j]; }
  constexpr double operator()(int i, int j) const { return m[i][j]; }
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a[0] - b[0], a[1] - b[1]}; }
constexpr Vec2 operator*(double s, Vec2 a) { return {s * a[0], s * a[1]}; }
constexpr Vec2 operator-(Vec2 a) { return {-a[0], -a[1]}; }

constexpr Cov2 operator+(Cov2 a, Cov2 b) { return {a[0] + b[0], a[1] + b[1]}; }
constexpr Cov2 operator-(Cov2 a, Cov2 b) { return {a[0] - b[0], a[1] - b[1]}; }
constexpr Cov2 operator*(double s, Cov2 a) { return {s * a[0], s * a[1]}; }

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
constexpr Vec3 operator*(double s, Vec3 a) { return {s * a[0], s * a[1], s * a[2]}; }

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(double s, const Mat2& a);
Mat2 operator*(const Mat2& a, const Mat2& b);

/// Metric, orientation and duality conventions: the single source of sign truth.
///
/// metric_diag is fixed to (+1,-1,-1); eps2/eps3 set the orientation of the
/// two- and three-dimensional Levi-Civita symbols; sgn_g is the metric
/// determinant sign flag entering the spin-side momentum.
struct Convention {
  std::array<double, 3> metric_diag{+1.0, -1.0, -1.0};
  int eps2 = +1;   // sign of eps_{12}
  int eps3 = +1;   // sign of eps_{012}
  int sgn_g = +1;

  void validate() const;

  std::string to_json() const;
  static Convention from_json(const std::string& text);
};

/// g_ab a^a b^b over the spatial block: 1 + v.v equals 1 - |v|^2 (Euclidean).
double dot(Vec2 a, Vec2 b, const Convention& conv);

/// g_mn a^m b^n over space-time; the timelike unit vector has u.u = 1.
double dot(Vec3 a, Vec3 b, const Convention& conv);

/// Natural pairing w_a v^a of a covariant with a contravariant vector.
double pair(Cov2 w, Vec2 v);

/// Index lowering/raising by the metric; a round trip is the identity.
Cov2 lower(Vec2 v, const Convention& conv);
Vec2 raise(Cov2 w, const Convention& conv);
Vec3 lower3(Vec3 u, const Convention& conv);  // returns u_mu as a component triple
Vec3 raise3(Vec3 w, const Convention& conv);

/// Spatial Hodge star (*w)_a = eps_ba w^b.
Cov2 star(Vec2 w, const Convention& conv);

/// Inverse of star: the unique v with star(v) = w.
Vec2 unstar(Cov2 w, const Convention& conv);

/// eps_ab a^a b^b, the scalar of the spatial bivector a ^ b. Antisymmetric.
double wedge(Vec2 a, Vec2 b, const Convention& conv);

/// (a x b)^mu = g^{mu rho} eps_{rho nu lam} a^nu b^lam. Bilinear, antisymmetric,
/// orthogonal to both factors.
Vec3 cross(Vec3 a, Vec3 b, const Convention& conv);

/// (a^b).(c^d) = (a.c)(b.d) - (a.d)(b.c), spatial bivectors.
double bivector_inner(Vec2 a, Vec2 b, Vec2 c, Vec2 d, const Convention& conv);

/// (a^b).(c^d) for space-time bivectors.
double bivector_inner(Vec3 a, Vec3 b, Vec3 c, Vec3 d, const Convention& conv);

/// sqrt(1 + v.v) = dtau/dt in (0, 1]; throws SuperluminalVelocity if 1 + v.v <= 0.
double lorentz_factor(Vec2 v, const Convention& conv);

/// Standard basis columns e_(1), e_(2).
constexpr Vec2 basis2(int a) { return a == 1 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0}; }

inline double norm2e(Vec2 v) { return std::sqrt(v[0] * v[0] + v[1] * v[1]); }
inline double norm2e(Cov2 v) { return std::sqrt(v[0] * v[0] + v[1] * v[1]); }
inline double norm3e(Vec3 v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

Mat2 inverse(const Mat2& m);  // throws SingularJacobian
Vec2 mul(const Mat2& m, Vec2 v);
Cov2 mul_cov(const Mat2& m, Vec2 v);  // A_ab v^b as a covariant column
double det(const Mat2& m);

}  // namespace relspin
