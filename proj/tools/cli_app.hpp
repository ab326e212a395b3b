#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "relspin/convention.hpp"
#include "relspin/equation.hpp"

namespace relspin::cli {

/// Run configuration parsed from a JSON file.  Exactly one of mu | (m0, s3)
/// must be given; with (m0, s3) the mass parameter is derived as m0/s3.
struct RunConfig {
  double mu = 1.0;
  std::optional<double> m0;
  std::optional<double> s3;
  Vec2 x0{};
  Vec2 v0{};
  Vec2 vp0{};
  double t0 = 0.0;
  double t1 = 10.0;
  double step = 1e-3;
  Method method = Method::rk4;
  Convention conv{};
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::string format = "csv";  // csv | json

  static RunConfig from_file(const std::string& path);
  static RunConfig from_json(const std::string& text);
};

// exit codes: 0 ok, 1 verify tolerance breach, 2 config failure, 3 integration failure
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIntegration = 3;

int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, const std::string& suite,
               const std::string& mutation, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::optional<double> mu_alt, std::ostream& out);

/// Full argv-level entry point (used by main and by the CLI tests).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relspin::cli
