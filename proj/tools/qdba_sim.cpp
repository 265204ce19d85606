// qdba-sim: runs protocol sweeps and writes metrics.csv / manifest.json.
#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qdba/error.hpp"
#include "qdba/experiments/config.hpp"
#include "qdba/experiments/ensemble.hpp"
#include "qdba/experiments/output.hpp"

namespace {

namespace ex = qdba::experiments;

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  int workers = 0;
  std::vector<std::string> params;
};

void add_common(CLI::App* cmd, Common& c, bool config_required) {
  auto* opt = cmd->add_option("--config", c.config_path, "Config file (key = value lines)");
  if (config_required) opt->required();
  cmd->add_option("--seed", c.seed, "Root seed (overrides config)");
  cmd->add_option("--out", c.out, "Output directory (overrides config)");
  cmd->add_option("--workers", c.workers, "Worker threads (0 = hardware concurrency)");
  cmd->add_option("--param", c.params, "Extra key=value setting, repeatable");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qdba::ConfigError("cannot read config file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int execute(const Common& c, ex::Overrides overrides) {
  for (const auto& p : c.params) overrides.push_back(ex::parse_assignment(p));
  if (c.seed) overrides.emplace_back("seed", std::to_string(*c.seed));
  if (c.out) overrides.emplace_back("output", *c.out);
  const std::string text = c.config_path.empty() ? std::string() : read_text(c.config_path);
  const ex::SweepConfig config = ex::parse_config(text, overrides);
  for (const auto& w : config.warnings) std::cerr << "warning: " << w << '\n';

  int workers = c.workers;
  if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto result = ex::run_ensemble(config, workers);
  ex::write_outputs(config, result, config.output);
  std::cout << "wrote " << result.rows.size() << " rows to " << config.output << "/metrics.csv\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-event simulator for detectable Byzantine agreement with EPR pairs"};
  app.set_version_flag("--version", QDBA_VERSION_STRING);
  app.require_subcommand(1);

  Common run_opts;
  auto* run = app.add_subcommand("run", "Run the sweep described by a config file");
  add_common(run, run_opts, true);

  Common ternary_opts;
  double p0 = 0.975;
  int resolution = 13;
  auto* ternary = app.add_subcommand("ternary", "Sweep the X/Y/Z noise simplex at fixed p0");
  add_common(ternary, ternary_opts, false);
  ternary->add_option("--p0", p0, "Probability of no error");
  ternary->add_option("--resolution", resolution, "Simplex subdivisions");

  Common sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Run a sweep given entirely by --param settings");
  add_common(sweep, sweep_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return execute(run_opts, {});
    if (*ternary) {
      return execute(ternary_opts, {{"profile", "logical"},
                                    {"p0", ex::format_double(p0)},
                                    {"ternary_resolution", std::to_string(resolution)}});
    }
    return execute(sweep_opts, {});
  } catch (const qdba::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
