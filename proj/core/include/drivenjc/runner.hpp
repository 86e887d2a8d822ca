#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drivenjc/config.hpp"

namespace drivenjc {

// Command-line overrides applied on top of a config before running.
struct RunOptions {
  std::optional<MixingBranch> branch;
  std::optional<double> tail_tol;
  std::optional<double> refine_tol;
};

// Executes one config and writes its CSV output (12 significant digits,
// byte-deterministic).  Column layout by kind:
//   fock/thermal and single-kind two_atom:  t,N,E
//   two_atom with kind = both:              t,N_phi,E_phi,N_psi,E_psi
//   sweep:                                  lambda,omega_c,E_phi,E_psi
//   esd:                                    death_time,revival_time  (inf when
//                                           still dark at the horizon end);
//     with lambda_min/lambda_max set, also <output stem>_lambda_star.csv.
// Returns the paths written.  Numeric failures throw.
std::vector<std::string> run_scenario(const ScenarioConfig& cfg,
                                      const RunOptions& opts = {});

// Writes the bundled datasets for figure id (1..5) into out_dir, one CSV per
// curve or panel, named figN_<panel>_<curve>.csv.  Throws UnknownFigureError
// for ids outside 1..5.
std::vector<std::string> reproduce_figure(int id, const std::string& out_dir,
                                          const RunOptions& opts = {});

// %.12g rendering used for every CSV cell.
std::string format_csv_number(double v);

}  // namespace drivenjc
