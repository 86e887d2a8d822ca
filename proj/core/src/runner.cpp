#include "drivenjc/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "drivenjc/errors.hpp"

namespace drivenjc {
namespace {

namespace fs = std::filesystem;

void write_rows(const std::string& path, const std::string& header,
                const std::vector<std::vector<double>>& rows) {
  if (const fs::path parent = fs::path(path).parent_path(); !parent.empty())
    fs::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << header << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << (i ? "," : "") << format_csv_number(row[i]);
    out << "\n";
  }
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

Scenario scenario_from_config(const ScenarioConfig& cfg, EwlKind kind) {
  switch (cfg.kind) {
    case ScenarioKind::Fock:
      return FockScenario{cfg.params, cfg.photons};
    case ScenarioKind::Thermal:
      return ThermalScenario{cfg.params, cfg.field};
    default:
      return TwoAtomScenario{cfg.params, ewl_from_config(cfg, kind)};
  }
}

std::vector<std::string> run_trace(const ScenarioConfig& cfg) {
  std::vector<std::vector<double>> rows;
  rows.reserve(cfg.grid.steps);

  if (cfg.kind == ScenarioKind::TwoAtom && cfg.select == KindSelect::Both) {
    const auto phi = negativity_trace(scenario_from_config(cfg, EwlKind::Phi), cfg.grid);
    const auto psi = negativity_trace(scenario_from_config(cfg, EwlKind::Psi), cfg.grid);
    for (int i = 0; i < cfg.grid.steps; ++i)
      rows.push_back({cfg.grid.at(i), phi.values[i].negativity,
                      phi.values[i].log_negativity, psi.values[i].negativity,
                      psi.values[i].log_negativity});
    write_rows(cfg.output, "t,N_phi,E_phi,N_psi,E_psi", rows);
    return {cfg.output};
  }

  const EwlKind kind = cfg.select == KindSelect::Psi ? EwlKind::Psi : EwlKind::Phi;
  const auto trace = negativity_trace(scenario_from_config(cfg, kind), cfg.grid);
  for (int i = 0; i < cfg.grid.steps; ++i)
    rows.push_back({cfg.grid.at(i), trace.values[i].negativity,
                    trace.values[i].log_negativity});
  write_rows(cfg.output, "t,N,E", rows);
  return {cfg.output};
}

std::vector<std::string> run_sweep(const ScenarioConfig& cfg) {
  const TwoAtomScenario base{cfg.params, ewl_from_config(cfg, EwlKind::Phi)};
  const auto lambdas = linspace(cfg.lambda_min, cfg.lambda_max, cfg.lambda_points);
  const auto omega_cs = linspace(cfg.omega_c_min, cfg.omega_c_max, cfg.omega_c_points);
  const DriveSweep sweep = sweep_drive_grid(base, lambdas, omega_cs, cfg.t_eval);

  std::vector<std::vector<double>> rows;
  rows.reserve(sweep.cells.size());
  std::size_t k = 0;
  for (double lambda : lambdas)
    for (double omega_c : omega_cs) {
      const SweepCell& cell = sweep.cells[k++];
      rows.push_back({lambda, omega_c, cell.e_phi, cell.e_psi});
    }
  write_rows(cfg.output, "lambda,omega_c,E_phi,E_psi", rows);
  return {cfg.output};
}

std::vector<std::string> run_esd(const ScenarioConfig& cfg) {
  const EwlKind kind = cfg.select == KindSelect::Psi ? EwlKind::Psi : EwlKind::Phi;
  const TwoAtomScenario scenario{cfg.params, ewl_from_config(cfg, kind)};
  const auto trace = negativity_trace(scenario, cfg.grid);
  const auto events = esd_events(trace, cfg.refine_tol);

  std::vector<std::vector<double>> rows;
  rows.reserve(events.size());
  for (const EsdEvent& ev : events) rows.push_back({ev.death_time, ev.revival_time});
  write_rows(cfg.output, "death_time,revival_time", rows);
  std::vector<std::string> written{cfg.output};

  if (cfg.has_critical_range) {
    const double lambda_star = esd_critical_drive(scenario, cfg.grid, cfg.lambda_min,
                                                  cfg.lambda_max);
    fs::path p(cfg.output);
    p.replace_filename(p.stem().string() + "_lambda_star.csv");
    write_rows(p.string(), "lambda_star", {{lambda_star}});
    written.push_back(p.string());
  }
  return written;
}

ScenarioConfig with_overrides(ScenarioConfig cfg, const RunOptions& opts) {
  if (opts.branch) cfg.params.branch = *opts.branch;
  if (opts.tail_tol) cfg.field.tail_tol = *opts.tail_tol;
  if (opts.refine_tol) cfg.refine_tol = *opts.refine_tol;
  return cfg;
}

// ---- bundled figure datasets -------------------------------------------

ScenarioConfig fock_curve(double omega_c, double lambda, int photons) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::Fock;
  cfg.params = {5.0, 1.0, omega_c, 1.0, lambda, MixingBranch::HalfPlane};
  cfg.photons = photons;
  cfg.grid = {0.0, 10.0, 2000};
  return cfg;
}

ScenarioConfig thermal_curve(double omega_c, double lambda, double mbar) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::Thermal;
  cfg.params = {5.0, 1.0, omega_c, 1.0, lambda, MixingBranch::HalfPlane};
  cfg.field = {mbar, 0, 1e-12};
  cfg.grid = {0.0, 10.0, 2000};
  return cfg;
}

ScenarioConfig pair_curve(double omega_c, double lambda, double r, KindSelect sel) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::TwoAtom;
  cfg.params = {1.0, 1.0, omega_c, 1.0, lambda, MixingBranch::HalfPlane};
  cfg.select = sel;
  cfg.r = r;
  cfg.mu_sq = 1.0 / 6.0;
  cfg.grid = {0.0, 20.0, 4000};
  return cfg;
}

std::vector<std::string> figure_sweep(const std::string& dir, const RunOptions& opts) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::Sweep;
  cfg.params = {1.0, 1.0, 0.0, 1.0, 0.0, MixingBranch::HalfPlane};
  cfg.r = 2.0 / 3.0;
  cfg.mu_sq = 1.0 / 6.0;
  cfg.t_eval = 2.0;
  cfg.lambda_min = 0.0;
  cfg.lambda_max = 3.0;
  cfg.lambda_points = 50;
  cfg.omega_c_min = 0.0;
  cfg.omega_c_max = 3.0;
  cfg.omega_c_points = 50;
  cfg = with_overrides(cfg, opts);

  const TwoAtomScenario base{cfg.params, ewl_from_config(cfg, EwlKind::Phi)};
  const auto lambdas = linspace(0.0, 3.0, 50);
  const auto omega_cs = linspace(0.0, 3.0, 50);
  const DriveSweep sweep = sweep_drive_grid(base, lambdas, omega_cs, cfg.t_eval);

  std::vector<std::vector<double>> phi_rows, psi_rows;
  std::size_t k = 0;
  for (double lambda : lambdas)
    for (double omega_c : omega_cs) {
      const SweepCell& cell = sweep.cells[k++];
      phi_rows.push_back({lambda, omega_c, cell.e_phi});
      psi_rows.push_back({lambda, omega_c, cell.e_psi});
    }
  const std::string phi_path = (fs::path(dir) / "fig3_upper_phi.csv").string();
  const std::string psi_path = (fs::path(dir) / "fig3_lower_psi.csv").string();
  write_rows(phi_path, "lambda,omega_c,E_phi", phi_rows);
  write_rows(psi_path, "lambda,omega_c,E_psi", psi_rows);
  return {phi_path, psi_path};
}

}  // namespace

std::string format_csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> run_scenario(const ScenarioConfig& raw, const RunOptions& opts) {
  const ScenarioConfig cfg = with_overrides(raw, opts);
  switch (cfg.kind) {
    case ScenarioKind::Sweep:
      return run_sweep(cfg);
    case ScenarioKind::Esd:
      return run_esd(cfg);
    default:
      return run_trace(cfg);
  }
}

std::vector<std::string> reproduce_figure(int id, const std::string& out_dir,
                                          const RunOptions& opts) {
  if (id < 1 || id > 5)
    throw UnknownFigureError("no figure " + std::to_string(id) + "; ids are 1..5");
  fs::create_directories(out_dir);

  if (id == 3) return figure_sweep(out_dir, opts);

  struct Curve {
    const char* name;
    ScenarioConfig cfg;
  };
  std::vector<Curve> curves;

  switch (id) {
    case 1:
      curves = {{"fig1_upper_dotted.csv", fock_curve(0.0, 0.0, 0)},
                {"fig1_upper_solid.csv", fock_curve(2.0, 2.0, 0)},
                {"fig1_lower_dotted.csv", fock_curve(0.0, 0.0, 1)},
                {"fig1_lower_solid.csv", fock_curve(2.0, 2.0, 1)}};
      break;
    case 2:
      curves = {{"fig2_upper_dotted.csv", thermal_curve(0.0, 0.0, 0.1)},
                {"fig2_upper_solid.csv", thermal_curve(2.0, 2.0, 0.1)},
                {"fig2_lower_dotted.csv", thermal_curve(0.0, 0.0, 0.3)},
                {"fig2_lower_solid.csv", thermal_curve(2.0, 2.0, 0.3)}};
      break;
    case 4:
      curves = {{"fig4_upper_dotted.csv", pair_curve(0.0, 0.0, 2.0 / 3.0, KindSelect::Phi)},
                {"fig4_upper_dashed.csv", pair_curve(0.5, 1.0, 2.0 / 3.0, KindSelect::Phi)},
                {"fig4_upper_solid.csv", pair_curve(0.5, 2.0, 2.0 / 3.0, KindSelect::Phi)},
                {"fig4_lower_dotted.csv", pair_curve(0.0, 0.0, 2.0 / 3.0, KindSelect::Psi)},
                {"fig4_lower_dashed.csv", pair_curve(0.5, 1.0, 2.0 / 3.0, KindSelect::Psi)},
                {"fig4_lower_solid.csv", pair_curve(0.5, 2.0, 2.0 / 3.0, KindSelect::Psi)}};
      break;
    case 5:
      curves = {{"fig5_upper_dotted.csv", pair_curve(0.5, 1.0, 0.5, KindSelect::Phi)},
                {"fig5_upper_dashed.csv", pair_curve(0.5, 1.0, 0.7, KindSelect::Phi)},
                {"fig5_upper_solid.csv", pair_curve(0.5, 1.0, 1.0, KindSelect::Phi)},
                {"fig5_lower_dotted.csv", pair_curve(0.5, 1.0, 0.5, KindSelect::Psi)},
                {"fig5_lower_dashed.csv", pair_curve(0.5, 1.0, 0.7, KindSelect::Psi)},
                {"fig5_lower_solid.csv", pair_curve(0.5, 1.0, 1.0, KindSelect::Psi)}};
      break;
  }

  std::vector<std::string> written;
  for (Curve& curve : curves) {
    curve.cfg.output = (fs::path(out_dir) / curve.name).string();
    const auto paths = run_scenario(curve.cfg, opts);
    written.insert(written.end(), paths.begin(), paths.end());
  }
  return written;
}

}  // namespace drivenjc
