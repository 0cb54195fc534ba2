#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tvd/errors.hpp"
#include "tvd/model_scenarios.hpp"
#include "tvd/oracle.hpp"
#include "tvd/runner.hpp"
#include "tvd/scenario_io.hpp"
#include "tvd/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagreement = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError(path + ": cannot write file");
}

tvd::io::Scenario load_scenario(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return tvd::io::parse_scenario(text);
  } catch (const tvd::io::ScenarioError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::optional<double> env_real(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0') throw InputError(std::string("environment ") + name + ": not a number: " + raw);
  return v;
}

std::optional<std::int64_t> env_int(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0') throw InputError(std::string("environment ") + name + ": not an integer: " + raw);
  return v;
}

struct CommonFlags {
  std::optional<double> tol_zero;
  std::optional<double> tol_violation;
  std::optional<std::int64_t> seed;
  unsigned jobs = 1;
};

// Environment first, then flags on top.
tvd::RunOptions run_options(const CommonFlags& flags) {
  tvd::RunOptions opt;
  opt.overrides.tau_zero = env_real("TVD_TOL_ZERO");
  opt.overrides.tau_violation = env_real("TVD_TOL_VIOLATION");
  opt.seed = env_int("TVD_SEED");
  if (flags.tol_zero) opt.overrides.tau_zero = flags.tol_zero;
  if (flags.tol_violation) opt.overrides.tau_violation = flags.tol_violation;
  if (flags.seed) opt.seed = flags.seed;
  opt.jobs = flags.jobs == 0 ? 1 : flags.jobs;
  for (const auto& v : {opt.overrides.tau_zero, opt.overrides.tau_violation}) {
    if (v && !(*v > 0.0)) throw InputError("tolerance overrides must be positive");
  }
  return opt;
}

std::string render(const tvd::io::Report& r, const std::string& format) {
  return format == "text" ? tvd::io::render_text(r) : tvd::io::serialize_report(r);
}

int cmd_check(const std::vector<std::string>& paths, const std::string& out, const std::string& format,
              const CommonFlags& flags) {
  const tvd::RunOptions opt = run_options(flags);
  std::vector<tvd::io::Scenario> scenarios;
  for (const auto& p : paths) scenarios.push_back(load_scenario(p));
  std::vector<tvd::io::Report> reports;
  try {
    reports = tvd::run_batch(scenarios, opt);
  } catch (const tvd::io::ScenarioError& e) {
    throw InputError(e.what());
  }
  if (reports.size() == 1) {
    write_output(out, render(reports[0], format));
    return kExitOk;
  }
  // Several scenarios: --out names a directory receiving one report each.
  if (!out.empty() && out != "-") std::filesystem::create_directories(out);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    if (out.empty() || out == "-") {
      std::cout << render(reports[k], format);
    } else {
      const std::string ext = format == "text" ? ".txt" : ".json";
      const auto stem = std::filesystem::path(paths[k]).stem().string();
      write_output((std::filesystem::path(out) / (stem + ".report" + ext)).string(), render(reports[k], format));
    }
  }
  return kExitOk;
}

int cmd_models(const std::string& name, const std::vector<std::string>& params, const std::string& out) {
  tvd::models::ParamMap map;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got '" + p + "'");
    map[p.substr(0, eq)] = p.substr(eq + 1);
  }
  const tvd::io::Scenario s = tvd::models::make_scenario(name, map);
  write_output(out, tvd::io::serialize_scenario(s));
  return kExitOk;
}

int cmd_oracle(const std::string& path, const std::string& report_path, const std::string& out,
               const std::string& format, const CommonFlags& flags) {
  const tvd::RunOptions opt = run_options(flags);
  const tvd::io::Scenario s = load_scenario(path);
  tvd::io::Report report;
  if (report_path.empty()) {
    try {
      report = tvd::run_scenario(s, opt);
    } catch (const tvd::io::ScenarioError& e) {
      throw InputError(path + ": " + e.what());
    }
  } else {
    try {
      report = tvd::io::parse_report(read_file(report_path));
    } catch (const tvd::io::ScenarioError& e) {
      throw InputError(report_path + ": " + e.what());
    }
  }
  report.oracle = tvd::oracle::cross_check(s, report);
  write_output(out, render(report, format));
  std::size_t disagreements = 0;
  for (const auto& c : *report.oracle) disagreements += c.agree ? 0 : 1;
  std::cerr << "oracle: " << report.oracle->size() - disagreements << " agree, " << disagreements
            << " disagree\n";
  return disagreements == 0 ? kExitOk : kExitDisagreement;
}

int cmd_selftest() {
  const tvd::RunOptions opt = run_options({});
  tvd::Tolerances tol = opt.overrides.apply_to({});
  try {
    tol.validate();
  } catch (const tvd::Error& e) {
    throw InputError(std::string("configuration: ") + e.what());
  }
  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& suite : tvd::selftest::run_all(tol)) {
    all = all && suite.ok();
    std::printf("%-12s %zu/%zu %s\n", suite.name.c_str(), suite.passed, suite.total, suite.ok() ? "ok" : "FAILED");
    for (const auto& f : suite.failures) std::printf("  failed: %s\n", f.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("selftest %s in %.2f s\n", all ? "passed" : "FAILED", secs);
  return all ? kExitOk : 1;
}

void add_tolerance_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--tol-zero", flags.tol_zero, "Override tau_zero");
  cmd->add_option("--tol-violation", flags.tol_violation, "Override tau_violation");
  cmd->add_option("--seed", flags.seed, "Seed recorded in provenance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-reversal violation detectors for finite-dimensional toy models"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::vector<std::string> scenario_paths;
  std::string scenario_path, report_path, out, format = "json", model_name;
  std::vector<std::string> params;

  auto* check = app.add_subcommand("check", "Run every request of one or more scenarios");
  check->add_option("--scenario", scenario_paths, "Scenario file(s)")->required();
  check->add_option("--out", out, "Output path (directory when several scenarios are given)");
  check->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  check->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_tolerance_flags(check, flags);

  auto* models = app.add_subcommand("models", "Emit a built-in model as a scenario");
  models->add_option("name", model_name, "Model name")->required()->check(CLI::IsMember(tvd::models::scenario_names()));
  models->add_option("--param", params, "Model parameter key=value");
  models->add_option("--out", out, "Output path");

  auto* oracle = app.add_subcommand("oracle", "Cross-check detector verdicts against brute-force margins");
  oracle->add_option("--scenario", scenario_path, "Scenario file")->required();
  oracle->add_option("--report", report_path, "Existing report to audit instead of a fresh run");
  oracle->add_option("--out", out, "Output path");
  oracle->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  add_tolerance_flags(oracle, flags);

  auto* selftest = app.add_subcommand("selftest", "Run the fixed-seed invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(scenario_paths, out, format, flags);
    if (models->parsed()) return cmd_models(model_name, params, out);
    if (oracle->parsed()) return cmd_oracle(scenario_path, report_path, out, format, flags);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const InputError& e) {
    std::cerr << "tvd: " << e.what() << "\n";
    return kExitInput;
  } catch (const tvd::Error& e) {
    std::cerr << "tvd: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "tvd: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
