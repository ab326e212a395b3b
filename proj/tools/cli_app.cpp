#include "cli_app.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "relspin/hamiltonian.hpp"
#include "relspin/io.hpp"
#include "relspin/spin.hpp"
#include "relspin/suites.hpp"

namespace relspin::cli {

namespace {

Vec2 vec2_of(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError(std::string(what) + " must be an array of 2 numbers");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
  RunConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  try {
    const bool has_mu = j.contains("mu");
    const bool has_spin = j.contains("m0") || j.contains("s3");
    if (has_mu == has_spin)
      throw ConfigError("exactly one of mu | (m0, s3) must be provided");
    if (has_mu) {
      cfg.mu = j.at("mu").get<double>();
    } else {
      cfg.m0 = j.at("m0").get<double>();
      cfg.s3 = j.at("s3").get<double>();
      cfg.mu = mass_renormalization(*cfg.m0, *cfg.s3);
    }
    if (j.contains("initial")) {
      const auto& ini = j.at("initial");
      if (ini.contains("x")) cfg.x0 = vec2_of(ini.at("x"), "initial.x");
      if (ini.contains("v")) cfg.v0 = vec2_of(ini.at("v"), "initial.v");
      if (ini.contains("vp")) cfg.vp0 = vec2_of(ini.at("vp"), "initial.vp");
    }
    if (j.contains("t_span")) {
      const auto& ts = j.at("t_span");
      if (!ts.is_array() || ts.size() != 2) throw ConfigError("t_span must be [t0, t1]");
      cfg.t0 = ts.at(0).get<double>();
      cfg.t1 = ts.at(1).get<double>();
    }
    cfg.step = j.value("step", 1e-3);
    cfg.method = method_from_name(j.value("method", std::string("rk4")));
    if (j.contains("convention"))
      cfg.conv = Convention::from_json(j.at("convention").dump());
    cfg.seed = j.value("seed", 1ull);
    cfg.out_dir = j.value("out_dir", std::string("."));
    cfg.format = j.value("format", std::string("csv"));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field failure: ") + e.what());
  }
  if (!(cfg.t1 > cfg.t0)) throw ConfigError("t_span must satisfy t1 > t0");
  if (!(cfg.step > 0.0)) throw ConfigError("step must be positive");
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("format must be csv or json");
  if (1.0 - cfg.v0[0] * cfg.v0[0] - cfg.v0[1] * cfg.v0[1] <= 0.0)
    throw ConfigError("SuperluminalVelocity: initial |v| must be below 1");
  cfg.conv.validate();
  return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  Trajectory traj;
  try {
    traj = integrate_worldline(cfg.x0, cfg.v0, cfg.vp0, cfg.mu, cfg.t0, cfg.t1,
                               cfg.step, cfg.method, cfg.conv);
  } catch (const Error& e) {
    out << "integration failure: " << e.what() << "\n";
    return kExitIntegration;
  }

  std::filesystem::create_directories(cfg.out_dir);
  if (cfg.format == "csv") {
    std::ofstream csv(cfg.out_dir + "/trajectory.csv");
    io::write_trajectory_csv(csv, traj);
  } else {
    write_file(cfg.out_dir + "/trajectory.json", io::trajectory_json(traj));
  }
  write_file(cfg.out_dir + "/manifest.json",
             io::trajectory_manifest(traj, cfg.x0, cfg.v0, cfg.vp0, cfg.conv));

  // summary: final H and p, curvature drift, worst residual
  const ProperTrajectory ptraj = to_proper_time(traj, cfg.conv);
  double kmin = 1e300, kmax = 0.0, worst_res = 0.0, worst_proper = 0.0;
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const double k = curvature(ptraj.samples[i], cfg.conv);
    kmin = std::min(kmin, k);
    kmax = std::max(kmax, k);
    const Cov2 r = residual_ep(traj.samples[i], cfg.mu, cfg.conv);
    worst_res = std::max({worst_res, std::abs(r[0]), std::abs(r[1])});
    worst_proper = std::max(
        worst_proper, norm3e(residual_proper(ptraj.samples[i], cfg.mu, cfg.conv)));
  }
  const double kdrift = kmax > 0.0 ? (kmax - kmin) / kmax : 0.0;
  const Jet& last = traj.samples.back();
  const Momenta m = momenta(last.v, last.vp, cfg.mu, cfg.conv);
  out << "samples: " << traj.samples.size() << "\n";
  out << "final H: " << hamiltonian_value(last.v, last.vp, cfg.mu, cfg.conv) << "\n";
  out << "final p: (" << m.p[0] << ", " << m.p[1] << ")\n";
  out << "curvature drift (relative): " << kdrift << "\n";
  out << "max equation residual: " << worst_res << "\n";
  out << "max proper-form residual: " << worst_proper << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite,
               const std::string& mutation, std::ostream& out) {
  suites::SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.mu = cfg.mu;
  opt.conv = cfg.conv;
  opt.mutation = mutation_from_name(mutation.empty() ? "none" : mutation);

  const auto results = suites::run_suite(suite, opt);
  const std::string report = suites::report_json(results, cfg.seed);
  std::filesystem::create_directories(cfg.out_dir);
  write_file(cfg.out_dir + "/report-" + suite + ".json", report);
  out << report << "\n";
  return suites::all_pass(results) ? kExitOk : kExitVerifyFailed;
}

int cmd_compare(const RunConfig& cfg, std::optional<double> mu_alt, std::ostream& out) {
  Trajectory direct;
  CanonicalTrajectory canon;
  try {
    direct = integrate_worldline(cfg.x0, cfg.v0, cfg.vp0, cfg.mu, cfg.t0, cfg.t1,
                                 cfg.step, Method::rk4, cfg.conv);
    const double mu_c = mu_alt.value_or(cfg.mu);
    const CanonicalState s0 =
        legendre_transform(cfg.t0, cfg.x0, cfg.v0, cfg.vp0, mu_c, cfg.conv);
    canon = canonical_flow(s0, mu_c, cfg.t0, cfg.t1, cfg.step, cfg.conv);
  } catch (const Error& e) {
    out << "integration failure: " << e.what() << "\n";
    return kExitIntegration;
  }

  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream csv(cfg.out_dir + "/compare.csv");
  csv << "t,x1_direct,x2_direct,x1_canonical,x2_canonical,deviation\n";
  double dev = 0.0;
  const std::size_t n = std::min(direct.samples.size(), canon.samples.size());
  char buf[256];
  for (std::size_t i = 0; i < n; ++i) {
    const Jet& a = direct.samples[i];
    const CanonicalState& b = canon.samples[i];
    const double d = norm2e(a.x - b.x);
    dev = std::max(dev, d);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", a.t,
                  a.x[0], a.x[1], b.x[0], b.x[1], d);
    csv << buf;
  }
  out << "max worldline deviation: " << dev << "\n";
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"third-order relativistic planar spinning-particle dynamics"};
  app.require_subcommand(1);

  std::string config_path, suite = "all", mutation = "none", out_dir, format;
  std::optional<std::uint64_t> seed;
  std::optional<double> mu_alt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON run configuration")->required();
    cmd->add_option("--seed", seed, "override the config seed");
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--format", format, "trajectory output format: csv|json");
  };

  CLI::App* sim = app.add_subcommand("simulate", "integrate one worldline");
  add_common(sim);
  CLI::App* ver = app.add_subcommand("verify", "run a seeded property suite");
  add_common(ver);
  ver->add_option("--suite", suite,
                  "helmholtz|symmetry|lagrangian|hamiltonian|spin|all");
  ver->add_option("--mutate", mutation, "run against a mutated coefficient field");
  CLI::App* cmp = app.add_subcommand("compare", "direct vs canonical flow");
  add_common(cmp);
  cmp->add_option("--mu-alt", mu_alt, "mismatched mass parameter for the canonical side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return e.get_exit_code() == 0 ? kExitOk : kExitConfig;
  }

  RunConfig cfg;
  try {
    cfg = RunConfig::from_file(config_path);
    if (seed) cfg.seed = *seed;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!format.empty()) cfg.format = format;
    if (cfg.format != "csv" && cfg.format != "json")
      throw ConfigError("format must be csv or json");
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (sim->parsed()) return cmd_simulate(cfg, out);
    if (ver->parsed()) return cmd_verify(cfg, suite, mutation, out);
    return cmd_compare(cfg, mu_alt, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIntegration;
  }
}

}  // namespace relspin::cli
