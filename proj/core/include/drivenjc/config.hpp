#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drivenjc/analysis.hpp"

namespace drivenjc {

enum class ScenarioKind { Fock, Thermal, TwoAtom, Sweep, Esd };

// Which EWL family a two-atom trace reports.  Both writes the Phi and Psi
// columns side by side.
enum class KindSelect { Phi, Psi, Both };

// One flat key = value document describes one run.  Fields not used by the
// chosen scenario kind keep their defaults and are rejected as keys.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::Fock;
  DrivenJCParams params{0.0, 0.0, 0.0, 1.0, 0.0, MixingBranch::HalfPlane};

  int photons = 0;                       // fock
  ThermalFieldSpec field{0.0, 0, 1e-12};  // thermal

  KindSelect select = KindSelect::Phi;   // two_atom / esd
  double r = 0.0;
  double mu_sq = 0.0;
  double mu_phase = 0.0;
  double nu_phase = 0.0;

  TimeGrid grid{0.0, 0.0, 0};

  double t_eval = 0.0;                   // sweep
  double lambda_min = 0.0, lambda_max = 0.0;
  int lambda_points = 0;
  double omega_c_min = 0.0, omega_c_max = 0.0;
  int omega_c_points = 0;

  double refine_tol = 1e-9;              // esd
  bool has_critical_range = false;       // esd: optional lambda_min/lambda_max

  std::string output = "out.csv";

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct ConfigError {
  enum Kind { MissingKey, UnknownKey, BadValue };
  Kind kind;
  int line;  // 1-based; 0 for missing keys
  std::string message;
};

struct ParseResult {
  std::optional<ScenarioConfig> config;
  std::vector<ConfigError> errors;  // every problem found, not just the first

  bool ok() const { return config.has_value(); }
};

// Flat key = value text, one key per line, '#' starts a comment, keys are
// lower_snake_case.  All errors are collected with line numbers.
ParseResult parse_config(std::string_view text);

// Canonical text for a valid config; parse_config(render_config(c)) == c.
std::string render_config(const ScenarioConfig& cfg);

// EWL amplitudes from the config fields: mu = sqrt(mu_sq) e^{i mu_phase},
// nu = sqrt(1 - mu_sq) e^{i nu_phase}.
EwlSpec ewl_from_config(const ScenarioConfig& cfg, EwlKind kind);

}  // namespace drivenjc
