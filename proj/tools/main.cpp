// Command-line front end: `run` executes a config file, `figure` writes the
// bundled datasets.  Exit codes: 0 success, 1 config/usage error, 2 numeric
// failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "drivenjc/errors.hpp"
#include "drivenjc/runner.hpp"

namespace {

const char* error_kind_name(drivenjc::ConfigError::Kind kind) {
  switch (kind) {
    case drivenjc::ConfigError::MissingKey: return "missing key";
    case drivenjc::ConfigError::UnknownKey: return "unknown key";
    default: return "bad value";
  }
}

int run_config(const std::string& path, const drivenjc::RunOptions& opts) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read config file " << path << "\n";
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();

  const drivenjc::ParseResult parsed = drivenjc::parse_config(text.str());
  if (!parsed.ok()) {
    for (const auto& err : parsed.errors)
      std::cerr << path << ":" << err.line << ": " << error_kind_name(err.kind)
                << ": " << err.message << "\n";
    return 1;
  }

  for (const std::string& file : drivenjc::run_scenario(*parsed.config, opts))
    std::cerr << "wrote " << file << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"driven Jaynes-Cummings entanglement dynamics toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string branch;
  double tail_tol = 0.0;
  double refine_tol = 0.0;
  auto* branch_opt = app.add_option("--branch", branch, "mixing-angle convention")
                         ->check(CLI::IsMember({"halfplane", "principal"}));
  auto* tail_opt = app.add_option("--tail-tol", tail_tol,
                                  "thermal truncation tolerance override");
  auto* refine_opt = app.add_option("--refine-tol", refine_tol,
                                    "ESD bisection tolerance override");

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "run a scenario config file");
  run_cmd->add_option("--config", config_path, "path to key = value config")
      ->required();

  int figure_id = 0;
  std::string out_dir = ".";
  auto* figure_cmd = app.add_subcommand("figure", "write a bundled figure dataset");
  figure_cmd->add_option("id", figure_id, "figure id (1..5)")->required();
  figure_cmd->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  drivenjc::RunOptions opts;
  if (branch_opt->count())
    opts.branch = branch == "halfplane" ? drivenjc::MixingBranch::HalfPlane
                                        : drivenjc::MixingBranch::Principal;
  if (tail_opt->count()) opts.tail_tol = tail_tol;
  if (refine_opt->count()) opts.refine_tol = refine_tol;

  try {
    if (run_cmd->parsed()) return run_config(config_path, opts);
    if (figure_cmd->parsed()) {
      for (const std::string& file : drivenjc::reproduce_figure(figure_id, out_dir, opts))
        std::cerr << "wrote " << file << "\n";
      return 0;
    }
  } catch (const drivenjc::UnknownFigureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
