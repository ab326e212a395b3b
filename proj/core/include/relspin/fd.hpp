#pragma once

#include <cmath>
#include <functional>

#include "relspin/errors.hpp"

namespace relspin::fd {

// Central-difference stencils on a line, one Richardson extrapolation level.
// All stencils have even error series, so R = (4 D(h/2) - D(h)) / 3 removes
// the leading h^2 term.  Step sizes grow with the derivative order to keep
// rounding noise below the truncation level.

inline constexpr double kStep1 = 1e-5;   // first-order partials
inline constexpr double kStep2 = 5e-5;   // mixed/second derivatives
inline constexpr double kStepLine = 2.5e-3;  // D1-type line stencils up to third order

using Line = std::function<double(double)>;

inline double d1(const Line& g, double h) {
  auto stencil = [&](double s) { return (g(s) - g(-s)) / (2.0 * s); };
  return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
}

/// First derivative with a refinement-disagreement estimate; throws
/// DerivativeNoise when the two Richardson inputs disagree beyond tolerance.
inline double d1_checked(const Line& g, double h) {
  auto stencil = [&](double s) { return (g(s) - g(-s)) / (2.0 * s); };
  const double c1 = stencil(h), c2 = stencil(h / 2.0);
  const double r = (4.0 * c2 - c1) / 3.0;
  if (std::abs(c2 - c1) > 1e-3 * std::max(1.0, std::abs(r)) + 1e-6)
    throw DerivativeNoise();
  return r;
}

inline double d2(const Line& g, double h) {
  const double g0 = g(0.0);
  auto stencil = [&](double s) { return (g(s) - 2.0 * g0 + g(-s)) / (s * s); };
  return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
}

inline double d3(const Line& g, double h) {
  auto stencil = [&](double s) {
    return (g(2.0 * s) - 2.0 * g(s) + 2.0 * g(-s) - g(-2.0 * s)) / (2.0 * s * s * s);
  };
  return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
}

/// Mixed second derivative d^2 f / du dw from a 4-point cross stencil,
/// where f is sampled as g(su, sw) = f(base + su*u + sw*w).
inline double d2_mixed(const std::function<double(double, double)>& g, double h) {
  auto stencil = [&](double s) {
    return (g(s, s) - g(s, -s) - g(-s, s) + g(-s, -s)) / (4.0 * s * s);
  };
  return (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
}

/// Mixed second derivative with two Richardson levels (O(h^6) truncation);
/// needed where sixth derivatives of the field are large near the light cone.
inline double d2_mixed2(const std::function<double(double, double)>& g, double h) {
  auto stencil = [&](double s) {
    return (g(s, s) - g(s, -s) - g(-s, s) + g(-s, -s)) / (4.0 * s * s);
  };
  auto r1 = [&](double s) { return (4.0 * stencil(s / 2.0) - stencil(s)) / 3.0; };
  return (16.0 * r1(h / 2.0) - r1(h)) / 15.0;
}

}  // namespace relspin::fd
