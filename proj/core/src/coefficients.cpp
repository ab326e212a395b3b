#include "relspin/coefficients.hpp"

#include <algorithm>
#include <cmath>

#include "relspin/fd.hpp"

namespace relspin {

namespace {

Vec2 axis(int a) { return a == 0 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0}; }

// directional derivative of a matrix field in v
Mat2 dv_dir(const MatField& f, const SamplePoint& at, Vec2 dir, double h) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto line = [&](double s) { return f(at.t, at.x, at.v + s * dir)(i, j); };
      r(i, j) = fd::d1_checked(line, h);
    }
  return r;
}

Mat2 dx_dir(const MatField& f, const SamplePoint& at, Vec2 dir, double h) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto line = [&](double s) { return f(at.t, at.x + s * dir, at.v)(i, j); };
      r(i, j) = fd::d1_checked(line, h);
    }
  return r;
}

Cov2 dv_dir(const CovField& f, const SamplePoint& at, Vec2 dir, double h) {
  Cov2 r;
  for (int i = 0; i < 2; ++i) {
    auto line = [&](double s) { return f(at.t, at.x, at.v + s * dir)[i]; };
    r[i] = fd::d1_checked(line, h);
  }
  return r;
}

Cov2 dx_dir(const CovField& f, const SamplePoint& at, Vec2 dir, double h) {
  Cov2 r;
  for (int i = 0; i < 2; ++i) {
    auto line = [&](double s) { return f(at.t, at.x + s * dir, at.v)[i]; };
    r[i] = fd::d1_checked(line, h);
  }
  return r;
}

}  // namespace

Cov2 assemble(const CoefficientField& cf, const Jet& jet, const Convention& conv) {
  (void)conv;
  const SamplePoint at{jet.t, jet.x, jet.v};
  const Mat2 A = cf.A(at.t, at.x, at.v);
  const Mat2 B = cf.B(at.t, at.x, at.v);
  const Cov2 c = cf.c(at.t, at.x, at.v);
  // wider step than the checker's partials: the term is divided by nothing
  // downstream, so rounding noise dominates truncation at small h
  const Mat2 Ap = dv_dir(cf.A, at, jet.vp, 1e-4);  // (v'.d_v)A
  return mul_cov(A, jet.vpp) + mul_cov(Ap, jet.vp) + mul_cov(B, jet.vp) + c;
}

CoefficientField motion_coefficients(double mu, const Convention& conv) {
  CoefficientField cf;
  cf.A = [conv](double, Vec2, Vec2 v) {
    const double W = lorentz_factor(v, conv);
    const double W3 = W * W * W;
    Mat2 a;
    a(0, 1) = conv.eps2 / W3;
    a(1, 0) = -conv.eps2 / W3;
    return a;
  };
  cf.B = [mu, conv](double, Vec2, Vec2 v) {
    const double W = lorentz_factor(v, conv);
    const double W2 = W * W, W3 = W2 * W;
    const Cov2 vl = lower(v, conv);
    Mat2 b;
    for (int a = 0; a < 2; ++a)
      for (int bb = 0; bb < 2; ++bb) {
        const double g = (a == bb) ? conv.metric_diag[a + 1] : 0.0;
        b(a, bb) = -mu * (vl[a] * vl[bb] - W2 * g) / W3;
      }
    return b;
  };
  cf.c = [](double, Vec2, Vec2) { return Cov2{}; };
  return cf;
}

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::skew_b: return "skew-b";
    case Mutation::c_vdep: return "c-vdep";
    case Mutation::a_tdep: return "a-tdep";
    case Mutation::a_exponent: return "a-exponent";
    case Mutation::b_vdep: return "b-vdep";
  }
  return "none";
}

Mutation mutation_from_name(const std::string& name) {
  for (Mutation m : {Mutation::none, Mutation::skew_b, Mutation::c_vdep,
                     Mutation::a_tdep, Mutation::a_exponent, Mutation::b_vdep})
    if (mutation_name(m) == name) return m;
  throw ConfigError("unknown mutation: " + name);
}

CoefficientField mutated_coefficients(double mu, const Convention& conv, Mutation m) {
  CoefficientField cf = motion_coefficients(mu, conv);
  switch (m) {
    case Mutation::none:
      break;
    case Mutation::skew_b: {
      auto base = cf.B;
      cf.B = [base, conv](double t, Vec2 x, Vec2 v) {
        Mat2 b = base(t, x, v);
        b(0, 1) += conv.eps2;
        b(1, 0) -= conv.eps2;
        return b;
      };
      break;
    }
    case Mutation::c_vdep: {
      cf.c = [conv](double, Vec2, Vec2 v) {
        const double s = 0.25 * dot(v, v, conv);
        const Cov2 vl = lower(v, conv);
        return Cov2{s * vl[0], s * vl[1]};
      };
      break;
    }
    case Mutation::a_tdep: {
      auto base = cf.A;
      cf.A = [base](double t, Vec2 x, Vec2 v) { return (1.0 + 0.3 * t) * base(t, x, v); };
      break;
    }
    case Mutation::a_exponent: {
      cf.A = [conv](double, Vec2, Vec2 v) {
        const double W = lorentz_factor(v, conv);
        Mat2 a;
        a(0, 1) = conv.eps2 / (W * W);
        a(1, 0) = -conv.eps2 / (W * W);
        return a;
      };
      break;
    }
    case Mutation::b_vdep: {
      auto base = cf.B;
      cf.B = [base, conv](double t, Vec2 x, Vec2 v) {
        return (1.0 + 0.5 * dot(v, v, conv)) * base(t, x, v);
      };
      break;
    }
  }
  return cf;
}

double d1_apply(const ScalarField& f, const SamplePoint& at) {
  auto line = [&](double s) {
    return f(at.t + s, at.x + s * at.v, at.v);
  };
  return fd::d1(line, fd::kStepLine);
}

const std::array<const char*, 6>& HelmholtzResiduals::names() {
  static const std::array<const char*, 6> n{"i", "ii", "iii", "iv", "v", "vi"};
  return n;
}

double HelmholtzResiduals::max() const {
  return *std::max_element(r.begin(), r.end());
}

HelmholtzResiduals helmholtz_residuals(const CoefficientField& cf,
                                       const SamplePoint& at,
                                       const Convention& conv) {
  (void)conv;
  const double h1 = cf.fd_step;       // first-order partials
  const double hl = fd::kStepLine;    // D1-line stencils
  const double h1n = 1e-4;            // inner step when nested under a line stencil

  const Mat2 B0 = cf.B(at.t, at.x, at.v);

  // first derivatives at the sample
  Mat2 dvA[2], dxA[2], dvB[2], dxB[2];
  Cov2 dvc[2], dxc[2];
  for (int a = 0; a < 2; ++a) {
    dvA[a] = dv_dir(cf.A, at, axis(a), h1);
    dxA[a] = dx_dir(cf.A, at, axis(a), h1);
    dvB[a] = dv_dir(cf.B, at, axis(a), h1);
    dxB[a] = dx_dir(cf.B, at, axis(a), h1);
    dvc[a] = dv_dir(cf.c, at, axis(a), h1);
    dxc[a] = dx_dir(cf.c, at, axis(a), h1);
  }

  // D1-type derivatives along the line (t, x) + s (1, v), v held fixed
  auto on_line = [&](double s) {
    return SamplePoint{at.t + s, at.x + s * at.v, at.v};
  };
  auto d1_of = [&](const std::function<double(const SamplePoint&)>& g, int order) {
    auto line = [&](double s) { return g(on_line(s)); };
    if (order == 1) return fd::d1(line, hl);
    if (order == 2) return fd::d2(line, hl);
    return fd::d3(line, hl);
  };

  Mat2 D1A, D1B, D13A;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      D1A(i, j) = d1_of([&](const SamplePoint& p) { return cf.A(p.t, p.x, p.v)(i, j); }, 1);
      D1B(i, j) = d1_of([&](const SamplePoint& p) { return cf.B(p.t, p.x, p.v)(i, j); }, 1);
      D13A(i, j) = d1_of([&](const SamplePoint& p) { return cf.A(p.t, p.x, p.v)(i, j); }, 3);
    }

  // D1 (and D1^2) of d_{v^c} A, and D1 of d_{x^a} A and of d_{v^a} c
  auto dvA_entry = [&](const SamplePoint& p, int cdir, int i, int j) {
    auto line = [&](double s) { return cf.A(p.t, p.x, p.v + s * axis(cdir))(i, j); };
    return fd::d1(line, h1n);
  };
  auto dxA_entry = [&](const SamplePoint& p, int adir, int i, int j) {
    auto line = [&](double s) { return cf.A(p.t, p.x + s * axis(adir), p.v)(i, j); };
    return fd::d1(line, h1n);
  };
  auto dvc_entry = [&](const SamplePoint& p, int adir, int b) {
    auto line = [&](double s) { return cf.c(p.t, p.x, p.v + s * axis(adir))[b]; };
    return fd::d1(line, h1n);
  };

  HelmholtzResiduals out;

  // (i): full antisymmetrization of T_abc = d_{v^a} A_bc; identically zero in 2D
  {
    double T[2][2][2];
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) T[a][b][c] = dvA[a](b, c);
    double m = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const double alt = (T[a][b][c] - T[a][c][b] - T[b][a][c] + T[b][c][a] +
                              T[c][a][b] - T[c][b][a]) /
                             6.0;
          m = std::max(m, std::abs(alt));
        }
    out.r[0] = m;
  }

  // (ii): 2 B_[ab] - 3 D1 A_ab
  {
    double m = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        m = std::max(m, std::abs(B0(a, b) - B0(b, a) - 3.0 * D1A(a, b)));
    out.r[1] = m;
  }

  // (iii): 2 d_{v^a} B_[bc] - 4 d_{x^a} A_[bc] + d_{x^c} A_ab + 2 D1 d_{v^c} A_ab
  {
    double m = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          const double t1 = dvB[a](b, c) - dvB[a](c, b);
          const double t2 = -2.0 * (dxA[a](b, c) - dxA[a](c, b));
          const double t3 = dxA[c](a, b);
          const double t4 = 2.0 * d1_of([&](const SamplePoint& p) {
            return dvA_entry(p, c, a, b);
          }, 1);
          m = std::max(m, std::abs(t1 + t2 + t3 + t4));
        }
    out.r[2] = m;
  }

  // (iv): d_{v^a} c_b - D1 B_(ab)
  {
    double m = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double sym = 0.5 * (D1B(a, b) + D1B(b, a));
        m = std::max(m, std::abs(dvc[a][b] - sym));
      }
    out.r[3] = m;
  }

  // (v): 2 d_{v^c} d_{v^a} c_b - 4 d_{x^a} B_[bc] + D1^2 d_{v^c} A_ab + 6 D1 d_{x^a} A_bc
  {
    double m = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
          auto cc = [&](double sa, double sc) {
            return cf.c(at.t, at.x, at.v + sa * axis(a) + sc * axis(c))[b];
          };
          const double t1 = 2.0 * fd::d2_mixed(cc, fd::kStep2);
          const double t2 = -2.0 * (dxB[a](b, c) - dxB[a](c, b));
          const double t3 = d1_of([&](const SamplePoint& p) {
            return dvA_entry(p, c, a, b);
          }, 2);
          const double t4 = 6.0 * d1_of([&](const SamplePoint& p) {
            return dxA_entry(p, a, b, c);
          }, 1);
          m = std::max(m, std::abs(t1 + t2 + t3 + t4));
        }
    out.r[4] = m;
  }

  // (vi): 4 d_{x^a} c_b - 2 D1 d_{v^a} c_b - D1^3 A_ab
  {
    double m = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double t1 = 4.0 * dxc[a][b];
        const double t2 = -2.0 * d1_of([&](const SamplePoint& p) {
          return dvc_entry(p, a, b);
        }, 1);
        const double t3 = -D13A(a, b);
        m = std::max(m, std::abs(t1 + t2 + t3));
      }
    out.r[5] = m;
  }

  return out;
}

}  // namespace relspin
