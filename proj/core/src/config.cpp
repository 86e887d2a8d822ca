#include "drivenjc/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace drivenjc {
namespace {

struct RawEntry {
  std::string value;
  int line;
  bool used = false;
};

std::string_view trim(std::string_view s) {
  const auto notspace = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
  while (!s.empty() && !notspace(s.front())) s.remove_prefix(1);
  while (!s.empty() && !notspace(s.back())) s.remove_suffix(1);
  return s;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Parser {
 public:
  explicit Parser(std::string_view text) { tokenize(text); }

  ParseResult run() {
    ScenarioConfig cfg;

    const std::string scenario = require_enum(
        "scenario", {"fock", "thermal", "two_atom", "sweep", "esd"});
    if (!errors_.empty() && scenario.empty()) {
      // Without the kind the required-key sets are unknown; report what we
      // have (unknown keys are still caught below).
      mark_known({"scenario"});
      return finish(cfg, false);
    }

    if (scenario == "fock") cfg.kind = ScenarioKind::Fock;
    else if (scenario == "thermal") cfg.kind = ScenarioKind::Thermal;
    else if (scenario == "two_atom") cfg.kind = ScenarioKind::TwoAtom;
    else if (scenario == "sweep") cfg.kind = ScenarioKind::Sweep;
    else cfg.kind = ScenarioKind::Esd;

    // Model parameters common to every kind.
    cfg.params.omega = require_double("omega", NonNegative);
    cfg.params.omega0 = require_double("omega0", NonNegative);
    cfg.params.g = require_double("g", Positive);
    if (auto b = optional_enum("branch", {"halfplane", "principal"}))
      cfg.params.branch =
          (*b == "halfplane") ? MixingBranch::HalfPlane : MixingBranch::Principal;
    if (auto out = optional_string("output")) cfg.output = *out;

    const bool traced = scenario != "sweep";
    if (traced) {
      cfg.params.omega_c = require_double("omega_c", NonNegative);
      cfg.params.lambda = require_double("lambda", NonNegative);
      cfg.grid.t_start = optional_double("t_start", NonNegative).value_or(0.0);
      cfg.grid.t_end = require_double("t_end", NonNegative);
      cfg.grid.steps = require_int("steps", 2);
      if (cfg.grid.t_end <= cfg.grid.t_start && has("t_end"))
        bad_value("t_end", "t_end must exceed t_start");
    }

    if (scenario == "fock") {
      cfg.photons = require_int("n", 0);
    } else if (scenario == "thermal") {
      cfg.field.mean_photons = require_double("mean_photons", NonNegative);
      cfg.field.cutoff = optional_int("cutoff", 0).value_or(0);
      cfg.field.tail_tol = optional_double("tail_tol", Positive).value_or(1e-12);
    } else if (scenario == "two_atom" || scenario == "esd") {
      const std::vector<std::string> kinds =
          scenario == "two_atom" ? std::vector<std::string>{"phi", "psi", "both"}
                                 : std::vector<std::string>{"phi", "psi"};
      const std::string kind = require_enum("kind", kinds);
      if (kind == "phi") cfg.select = KindSelect::Phi;
      else if (kind == "psi") cfg.select = KindSelect::Psi;
      else if (kind == "both") cfg.select = KindSelect::Both;
      cfg.r = require_double("r", UnitInterval);
      cfg.mu_sq = require_double("mu_sq", UnitInterval);
      cfg.mu_phase = optional_double("mu_phase", Any).value_or(0.0);
      cfg.nu_phase = optional_double("nu_phase", Any).value_or(0.0);
      if (scenario == "esd") {
        cfg.refine_tol = optional_double("refine_tol", Positive).value_or(1e-9);
        const auto lo = optional_double("lambda_min", NonNegative);
        const auto hi = optional_double("lambda_max", NonNegative);
        if (lo.has_value() != hi.has_value())
          missing_key(lo ? "lambda_max" : "lambda_min",
                      "lambda_min and lambda_max must be given together");
        if (lo && hi) {
          cfg.has_critical_range = true;
          cfg.lambda_min = *lo;
          cfg.lambda_max = *hi;
          if (*lo >= *hi) bad_value("lambda_max", "lambda_max must exceed lambda_min");
        }
      }
    } else {  // sweep
      cfg.r = require_double("r", UnitInterval);
      cfg.mu_sq = require_double("mu_sq", UnitInterval);
      cfg.mu_phase = optional_double("mu_phase", Any).value_or(0.0);
      cfg.nu_phase = optional_double("nu_phase", Any).value_or(0.0);
      cfg.t_eval = require_double("t_eval", NonNegative);
      cfg.lambda_min = require_double("lambda_min", NonNegative);
      cfg.lambda_max = require_double("lambda_max", NonNegative);
      cfg.lambda_points = require_int("lambda_points", 1);
      cfg.omega_c_min = require_double("omega_c_min", NonNegative);
      cfg.omega_c_max = require_double("omega_c_max", NonNegative);
      cfg.omega_c_points = require_int("omega_c_points", 1);
      if (has("lambda_max") && cfg.lambda_max < cfg.lambda_min)
        bad_value("lambda_max", "lambda_max must be >= lambda_min");
      if (has("omega_c_max") && cfg.omega_c_max < cfg.omega_c_min)
        bad_value("omega_c_max", "omega_c_max must be >= omega_c_min");
    }

    for (const auto& [key, entry] : entries_)
      if (!entry.used)
        errors_.push_back({ConfigError::UnknownKey, entry.line,
                           "unknown key '" + key + "' for scenario " + scenario});

    return finish(cfg, errors_.empty());
  }

 private:
  enum Constraint { Any, NonNegative, Positive, UnitInterval };

  void tokenize(std::string_view text) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t eol = std::min(text.find('\n', pos), text.size());
      std::string_view line = text.substr(pos, eol - pos);
      ++line_no;
      pos = eol + 1;

      if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;

      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) {
        errors_.push_back({ConfigError::BadValue, line_no,
                           "expected key = value, got '" + std::string(line) + "'"});
        continue;
      }
      const std::string key{trim(line.substr(0, eq))};
      const std::string value{trim(line.substr(eq + 1))};
      if (key.empty()) {
        errors_.push_back({ConfigError::BadValue, line_no, "empty key"});
        continue;
      }
      if (entries_.count(key)) {
        errors_.push_back({ConfigError::BadValue, line_no, "duplicate key '" + key + "'"});
        continue;
      }
      entries_.emplace(key, RawEntry{value, line_no});
    }
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  RawEntry* fetch(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  void missing_key(const std::string& key, std::string detail = {}) {
    errors_.push_back({ConfigError::MissingKey, 0,
                       detail.empty() ? "missing required key '" + key + "'"
                                      : std::move(detail)});
  }

  void bad_value(const std::string& key, const std::string& detail) {
    const auto it = entries_.find(key);
    errors_.push_back({ConfigError::BadValue, it == entries_.end() ? 0 : it->second.line,
                       "key '" + key + "': " + detail});
  }

  bool check(const std::string& key, double v, Constraint c) {
    switch (c) {
      case Any:
        return true;
      case NonNegative:
        if (v < 0.0) bad_value(key, "must be >= 0");
        return v >= 0.0;
      case Positive:
        if (v <= 0.0) bad_value(key, "must be > 0");
        return v > 0.0;
      case UnitInterval:
        if (v < 0.0 || v > 1.0) bad_value(key, "must lie in [0, 1]");
        return v >= 0.0 && v <= 1.0;
    }
    return false;
  }

  std::optional<double> parse_double(const std::string& key, const RawEntry& e) {
    const char* first = e.value.data();
    const char* last = first + e.value.size();
    double v{};
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
      bad_value(key, "not a finite number: '" + e.value + "'");
      return std::nullopt;
    }
    return v;
  }

  double require_double(const std::string& key, Constraint c) {
    RawEntry* e = fetch(key);
    if (!e) {
      missing_key(key);
      return 0.0;
    }
    const auto v = parse_double(key, *e);
    if (!v) return 0.0;
    check(key, *v, c);
    return *v;
  }

  std::optional<double> optional_double(const std::string& key, Constraint c) {
    RawEntry* e = fetch(key);
    if (!e) return std::nullopt;
    const auto v = parse_double(key, *e);
    if (!v) return std::nullopt;
    check(key, *v, c);
    return v;
  }

  int require_int(const std::string& key, int min_value) {
    RawEntry* e = fetch(key);
    if (!e) {
      missing_key(key);
      return min_value;
    }
    int v{};
    const char* first = e->value.data();
    const char* last = first + e->value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      bad_value(key, "not an integer: '" + e->value + "'");
      return min_value;
    }
    if (v < min_value)
      bad_value(key, "must be >= " + std::to_string(min_value));
    return v;
  }

  std::optional<int> optional_int(const std::string& key, int min_value) {
    if (!has(key)) return std::nullopt;
    return require_int(key, min_value);
  }

  std::string require_enum(const std::string& key, const std::vector<std::string>& allowed) {
    RawEntry* e = fetch(key);
    if (!e) {
      missing_key(key);
      return {};
    }
    if (std::find(allowed.begin(), allowed.end(), e->value) == allowed.end()) {
      std::string opts;
      for (const auto& a : allowed) opts += (opts.empty() ? "" : ", ") + a;
      bad_value(key, "expected one of {" + opts + "}, got '" + e->value + "'");
      return {};
    }
    return e->value;
  }

  std::optional<std::string> optional_enum(const std::string& key,
                                           const std::vector<std::string>& allowed) {
    if (!has(key)) return std::nullopt;
    const std::string v = require_enum(key, allowed);
    if (v.empty()) return std::nullopt;
    return v;
  }

  std::optional<std::string> optional_string(const std::string& key) {
    RawEntry* e = fetch(key);
    if (!e) return std::nullopt;
    if (e->value.empty()) {
      bad_value(key, "must not be empty");
      return std::nullopt;
    }
    return e->value;
  }

  void mark_known(const std::vector<std::string>& keys) {
    for (const auto& k : keys) fetch(k);
  }

  ParseResult finish(ScenarioConfig& cfg, bool ok) {
    ParseResult res;
    res.errors = std::move(errors_);
    if (ok) res.config = std::move(cfg);
    return res;
  }

  std::map<std::string, RawEntry> entries_;
  std::vector<ConfigError> errors_;
};

}  // namespace

ParseResult parse_config(std::string_view text) { return Parser(text).run(); }

std::string render_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  const auto kv = [&](const char* key, const std::string& value) {
    out << key << " = " << value << "\n";
  };
  const auto kvd = [&](const char* key, double v) { kv(key, fmt17(v)); };
  const auto kvi = [&](const char* key, int v) { kv(key, std::to_string(v)); };

  const char* scenario = nullptr;
  switch (cfg.kind) {
    case ScenarioKind::Fock: scenario = "fock"; break;
    case ScenarioKind::Thermal: scenario = "thermal"; break;
    case ScenarioKind::TwoAtom: scenario = "two_atom"; break;
    case ScenarioKind::Sweep: scenario = "sweep"; break;
    case ScenarioKind::Esd: scenario = "esd"; break;
  }
  kv("scenario", scenario);
  kvd("omega", cfg.params.omega);
  kvd("omega0", cfg.params.omega0);
  kvd("g", cfg.params.g);
  kv("branch", cfg.params.branch == MixingBranch::HalfPlane ? "halfplane" : "principal");

  const bool traced = cfg.kind != ScenarioKind::Sweep;
  if (traced) {
    kvd("omega_c", cfg.params.omega_c);
    kvd("lambda", cfg.params.lambda);
    kvd("t_start", cfg.grid.t_start);
    kvd("t_end", cfg.grid.t_end);
    kvi("steps", cfg.grid.steps);
  }

  switch (cfg.kind) {
    case ScenarioKind::Fock:
      kvi("n", cfg.photons);
      break;
    case ScenarioKind::Thermal:
      kvd("mean_photons", cfg.field.mean_photons);
      kvi("cutoff", cfg.field.cutoff);
      kvd("tail_tol", cfg.field.tail_tol);
      break;
    case ScenarioKind::TwoAtom:
    case ScenarioKind::Esd:
      kv("kind", cfg.select == KindSelect::Phi   ? "phi"
                 : cfg.select == KindSelect::Psi ? "psi"
                                                 : "both");
      kvd("r", cfg.r);
      kvd("mu_sq", cfg.mu_sq);
      kvd("mu_phase", cfg.mu_phase);
      kvd("nu_phase", cfg.nu_phase);
      if (cfg.kind == ScenarioKind::Esd) {
        kvd("refine_tol", cfg.refine_tol);
        if (cfg.has_critical_range) {
          kvd("lambda_min", cfg.lambda_min);
          kvd("lambda_max", cfg.lambda_max);
        }
      }
      break;
    case ScenarioKind::Sweep:
      kvd("r", cfg.r);
      kvd("mu_sq", cfg.mu_sq);
      kvd("mu_phase", cfg.mu_phase);
      kvd("nu_phase", cfg.nu_phase);
      kvd("t_eval", cfg.t_eval);
      kvd("lambda_min", cfg.lambda_min);
      kvd("lambda_max", cfg.lambda_max);
      kvi("lambda_points", cfg.lambda_points);
      kvd("omega_c_min", cfg.omega_c_min);
      kvd("omega_c_max", cfg.omega_c_max);
      kvi("omega_c_points", cfg.omega_c_points);
      break;
  }
  kv("output", cfg.output);
  return out.str();
}

EwlSpec ewl_from_config(const ScenarioConfig& cfg, EwlKind kind) {
  const double mu_mag = std::sqrt(cfg.mu_sq);
  const double nu_mag = std::sqrt(1.0 - cfg.mu_sq);
  return {kind, cfg.r, std::polar(mu_mag, cfg.mu_phase),
          std::polar(nu_mag, cfg.nu_phase)};
}

}  // namespace drivenjc
