#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relspin/coefficients.hpp"
#include "relspin/convention.hpp"

namespace relspin::suites {

/// One named residual check: the max residual seen over the sampled points
/// against its declared tolerance.  For the per-sample condition checks the
/// full residual sequence is kept, in sampling order.
struct CheckResult {
  std::string suite;
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> extra;  // e.g. sigma, sgn_g
  std::vector<double> residuals;                      // per sample, when recorded
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  double mu = 1.0;
  Mutation mutation = Mutation::none;
  Convention conv{};
};

/// Deterministic sampler used by every randomized suite: v uniform over the
/// disk |v| <= 0.9, other components uniform per coordinate.
struct Sampler {
  explicit Sampler(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  double u01();
  double uniform(double a, double b);
  Vec2 disk(double rmax = 0.9);
  Vec2 box(double half = 1.0);

 private:
  std::uint64_t state;
};

std::vector<CheckResult> run_helmholtz(const SuiteOptions& opt);
std::vector<CheckResult> run_symmetry(const SuiteOptions& opt);
std::vector<CheckResult> run_lagrangian(const SuiteOptions& opt);
std::vector<CheckResult> run_hamiltonian(const SuiteOptions& opt);
std::vector<CheckResult> run_spin(const SuiteOptions& opt);

/// Dispatch by suite name; "all" concatenates every suite in a fixed order.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

/// Machine-readable report: ordered array of every residual, plus the seed.
std::string report_json(const std::vector<CheckResult>& results, std::uint64_t seed);

}  // namespace relspin::suites
