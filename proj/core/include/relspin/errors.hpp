#pragma once

#include <stdexcept>
#include <string>

namespace relspin {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// 1 + v.v <= 0: the velocity is on or outside the light cone.
struct SuperluminalVelocity : Error {
  explicit SuperluminalVelocity(const std::string& what = "superluminal velocity")
      : Error(what) {}
};

/// Adaptive integrator could not meet the tolerance above the minimum step.
struct StepUnderflow : Error {
  explicit StepUnderflow(const std::string& what = "adaptive step underflow")
      : Error(what) {}
};

/// A norm radicand that must be nonnegative came out negative beyond tolerance.
struct NegativeRadicand : Error {
  explicit NegativeRadicand(const std::string& what = "negative radicand")
      : Error(what) {}
};

/// Finite-difference refinement levels disagree: the field is too rough here.
struct DerivativeNoise : Error {
  explicit DerivativeNoise(const std::string& what = "finite-difference noise")
      : Error(what) {}
};

struct SingularA : Error {
  explicit SingularA(const std::string& what = "leading skew matrix is singular")
      : Error(what) {}
};

struct SingularJacobian : Error {
  explicit SingularJacobian(const std::string& what = "singular Jacobi matrix")
      : Error(what) {}
};

struct NewtonDivergence : Error {
  explicit NewtonDivergence(const std::string& what = "Newton iteration diverged")
      : Error(what) {}
};

struct ZeroSpin : Error {
  explicit ZeroSpin(const std::string& what = "spin magnitude is zero") : Error(what) {}
};

struct ZeroMu : Error {
  explicit ZeroMu(const std::string& what = "mass parameter mu is zero") : Error(what) {}
};

struct NotSkew : Error {
  explicit NotSkew(const std::string& what = "matrix is not skew-symmetric")
      : Error(what) {}
};

struct DegenerateDenominator : Error {
  explicit DegenerateDenominator(const std::string& what = "degenerate denominator")
      : Error(what) {}
};

/// Malformed run configuration or report request.
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace relspin
