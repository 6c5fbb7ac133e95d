// soilpv: buck sizing, P-V curve export and closed-loop simulation of a
// solar-powered soil humidity controller.
//
//   soilpv design   --config system.cfg
//   soilpv curve    --config system.cfg --out pv.csv
//   soilpv simulate --config system.cfg --set sim.duration=3600

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "soilpv/commands.hpp"
#include "soilpv/config.hpp"
#include "soilpv/errors.hpp"

namespace {

using soilpv::config::ExitCode;

int code(ExitCode c) { return static_cast<int>(c); }

struct Options {
  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--config,-c", opts.config_path, "Scenario file ([section] key = value)");
  cmd->add_option("--out,-o", opts.out_path, "Output file (default: standard output)");
  cmd->add_option("--set", opts.overrides, "Override a key after loading: section.key=value")
      ->take_all();
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

int emit(const Options& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text << std::flush;
    return code(ExitCode::ok);
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << opts.out_path << "\n";
    return code(ExitCode::failed);
  }
  return code(ExitCode::ok);
}

int execute(const std::string& command, const Options& opts) {
  std::string text;
  if (!opts.config_path.empty() && !read_file(opts.config_path, text)) {
    std::cerr << "error: cannot read config " << opts.config_path << "\n";
    return code(ExitCode::failed);
  }

  soilpv::sim::Scenario scenario;
  try {
    scenario = soilpv::config::parse_config(text, opts.overrides);
  } catch (const soilpv::config::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return code(e.exit_code());
  }

  try {
    if (command == "design") {
      const auto result = soilpv::commands::cmd_design(scenario);
      if (result.exit_code == ExitCode::infeasible) {
        std::cerr << result.output;
        return code(result.exit_code);
      }
      const int written = emit(opts, result.output);
      return written != 0 ? written : code(result.exit_code);
    }
    if (command == "curve") return emit(opts, soilpv::commands::cmd_curve(scenario));
    return emit(opts, soilpv::commands::cmd_simulate(scenario));
  } catch (const soilpv::StepError& e) {
    std::cerr << "simulation error: " << e.what() << "\n";
    return code(ExitCode::invariant);
  } catch (const soilpv::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return code(ExitCode::invariant);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solar-powered soil humidity control: design, curves, simulation"};
  app.require_subcommand(1);

  Options opts;
  auto* design = app.add_subcommand("design", "Size the buck converter and validate L and C");
  auto* curve = app.add_subcommand("curve", "Export P-V curves with maximum-power footers (CSV)");
  auto* simulate = app.add_subcommand("simulate", "Run the closed-loop simulation (CSV)");
  for (auto* cmd : {design, curve, simulate}) add_common(cmd, opts);

  CLI11_PARSE(app, argc, argv);

  for (auto* cmd : {design, curve, simulate}) {
    if (cmd->parsed()) return execute(cmd->get_name(), opts);
  }
  return code(ExitCode::failed);
}
