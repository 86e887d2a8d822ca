#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "drivenjc/atom_field.hpp"
#include "drivenjc/two_atom.hpp"

namespace drivenjc {

// Negativity at or below this is treated as zero.  The X-state closed form
// produces exact zeros, so the threshold only guards oracle cross-checks.
inline constexpr double kEsdZeroThreshold = 1e-12;

struct TimeGrid {
  double t_start;
  double t_end;
  int steps;  // number of samples including both endpoints, >= 2

  double at(int i) const {
    return t_start + (t_end - t_start) * i / (steps - 1);
  }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

struct FockScenario {
  DrivenJCParams params;
  int photons;
};

struct ThermalScenario {
  DrivenJCParams params;
  ThermalFieldSpec field;
};

// Two identical noninteracting driven atoms, each in its own vacuum cavity;
// the pair starts in an extended Werner-like state and each atom evolves
// under the damping channel with amplitude alpha_0(t).
struct TwoAtomScenario {
  DrivenJCParams params;
  EwlSpec initial;
};

using Scenario = std::variant<FockScenario, ThermalScenario, TwoAtomScenario>;

struct NegPoint {
  double negativity;
  double log_negativity;
};

// (N, E) at a single time; the same evaluator backs traces and the bisection
// refinements, so both see bit-identical values.
NegPoint scenario_negativity(const Scenario& s, double t);

struct NegativityTrace {
  TimeGrid grid;
  std::vector<NegPoint> values;  // one per grid sample
  std::string label;
  Scenario scenario;  // kept so events can be refined off-grid
};

NegativityTrace negativity_trace(const Scenario& s, const TimeGrid& grid,
                                 std::string label = {});

// A dark period: negativity identically zero between death and revival.
// revival_time is +inf when the period is still open at the end of the
// horizon.
struct EsdEvent {
  double death_time;
  double revival_time;

  bool open_ended() const {
    return revival_time == std::numeric_limits<double>::infinity();
  }
};

// Grid-level zero crossings of N refined by bisection on the scenario
// function down to refine_tol; the reported times sit on the dark side of
// each transition.  A trace that starts dark opens an event at t_start; one
// that ends dark closes open-ended.  Callers owe the grid at least ~100
// samples per oscillation or crossings may be missed.
std::vector<EsdEvent> esd_events(const NegativityTrace& trace,
                                 double refine_tol = 1e-9);

// Smallest drive strength, within lambda_tol, at which the horizon shows no
// dark period.  A dark period means at least two consecutive horizon samples
// at zero negativity; isolated zero touches of never-dying states do not
// count.  Requires ESD present at lambda_lo and absent at lambda_hi, else
// BracketInvalidError.
double esd_critical_drive(const TwoAtomScenario& base, const TimeGrid& horizon,
                          double lambda_lo, double lambda_hi,
                          double lambda_tol = 1e-4);

struct SweepCell {
  double e_phi;
  double e_psi;
};

struct DriveSweep {
  std::vector<double> lambdas;
  std::vector<double> omega_cs;
  std::vector<SweepCell> cells;  // row-major: lambda outer, omega_c inner

  const SweepCell& at(int i_lambda, int j_omega_c) const {
    return cells[static_cast<std::size_t>(i_lambda) * omega_cs.size() + j_omega_c];
  }
};

// E_Phi and E_Psi at fixed t_eval over a (lambda, omega_c) grid.  The base
// scenario supplies everything else (its own lambda/omega_c and EWL kind are
// ignored; both kinds are evaluated per cell).
DriveSweep sweep_drive_grid(const TwoAtomScenario& base,
                            const std::vector<double>& lambdas,
                            const std::vector<double>& omega_cs, double t_eval);

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace drivenjc
