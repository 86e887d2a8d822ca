#include "drivenjc/analysis.hpp"

#include <cmath>
#include <sstream>

#include "drivenjc/errors.hpp"

namespace drivenjc {
namespace {

NegPoint two_atom_point(const TwoAtomScenario& s, double t) {
  const DressedFrame f = dressed_frame(s.params);
  const DampingChannel ch{amplitudes(f, 0, t).alpha};
  const XState xt = evolve_pair(ewl_state(s.initial), ch, ch);
  const NegativityResult r = x_log_negativity(xt);
  return {r.negativity, r.log_negativity};
}

bool alive(double negativity) { return negativity > kEsdZeroThreshold; }

double scenario_n(const Scenario& s, double t) {
  return scenario_negativity(s, t).negativity;
}

// Bisect an alive->dead transition; returns the dead-side end of the final
// bracket, so N at the reported time is exactly zero for closed forms.
double refine_death(const Scenario& s, double t_alive, double t_dead, double tol) {
  while (t_dead - t_alive > tol) {
    const double mid = 0.5 * (t_alive + t_dead);
    (alive(scenario_n(s, mid)) ? t_alive : t_dead) = mid;
  }
  return t_dead;
}

double refine_revival(const Scenario& s, double t_dead, double t_alive, double tol) {
  while (t_alive - t_dead > tol) {
    const double mid = 0.5 * (t_dead + t_alive);
    (alive(scenario_n(s, mid)) ? t_alive : t_dead) = mid;
  }
  return t_dead;
}

}  // namespace

NegPoint scenario_negativity(const Scenario& s, double t) {
  if (const auto* fock = std::get_if<FockScenario>(&s)) {
    const double e = fock_log_negativity(fock->params, fock->photons, t);
    return {0.5 * (std::exp2(e) - 1.0), e};
  }
  if (const auto* th = std::get_if<ThermalScenario>(&s)) {
    const double e = thermal_log_negativity(th->params, th->field, t);
    return {0.5 * (std::exp2(e) - 1.0), e};
  }
  return two_atom_point(std::get<TwoAtomScenario>(s), t);
}

NegativityTrace negativity_trace(const Scenario& s, const TimeGrid& grid,
                                 std::string label) {
  NegativityTrace trace{grid, {}, std::move(label), s};
  trace.values.reserve(grid.steps);
  for (int i = 0; i < grid.steps; ++i)
    trace.values.push_back(scenario_negativity(s, grid.at(i)));
  return trace;
}

std::vector<EsdEvent> esd_events(const NegativityTrace& trace, double refine_tol) {
  std::vector<EsdEvent> events;
  bool dark = !alive(trace.values[0].negativity);
  double death = trace.grid.t_start;

  for (int i = 1; i < trace.grid.steps; ++i) {
    const bool is_alive = alive(trace.values[i].negativity);
    if (!dark && !is_alive) {
      dark = true;
      death = refine_death(trace.scenario, trace.grid.at(i - 1), trace.grid.at(i),
                           refine_tol);
    } else if (dark && is_alive) {
      dark = false;
      events.push_back({death, refine_revival(trace.scenario, trace.grid.at(i - 1),
                                              trace.grid.at(i), refine_tol)});
    }
  }
  if (dark) events.push_back({death, std::numeric_limits<double>::infinity()});
  return events;
}

double esd_critical_drive(const TwoAtomScenario& base, const TimeGrid& horizon,
                          double lambda_lo, double lambda_hi, double lambda_tol) {
  // A dark period must span at least two consecutive horizon samples.  The
  // entanglement of a never-dying state can still touch zero at isolated
  // instants (e.g. the resonant Bell pair at alpha_0 = 0); such grazes cover
  // a sliver far narrower than any reasonable grid step and do not count.
  auto has_dark_period = [&](double lambda) {
    TwoAtomScenario s = base;
    s.params.lambda = lambda;
    bool prev_dark = false;
    for (int i = 0; i < horizon.steps; ++i) {
      const bool dark = !alive(two_atom_point(s, horizon.at(i)).negativity);
      if (dark && prev_dark) return true;
      prev_dark = dark;
    }
    return false;
  };

  if (!has_dark_period(lambda_lo) || has_dark_period(lambda_hi)) {
    std::ostringstream msg;
    msg << "critical-drive predicate not bracketed: lambda=" << lambda_lo
        << (has_dark_period(lambda_lo) ? " has" : " has no") << " dark period, lambda="
        << lambda_hi << (has_dark_period(lambda_hi) ? " has" : " has no")
        << " dark period over the horizon";
    throw BracketInvalidError(msg.str());
  }

  while (lambda_hi - lambda_lo > lambda_tol) {
    const double mid = 0.5 * (lambda_lo + lambda_hi);
    (has_dark_period(mid) ? lambda_lo : lambda_hi) = mid;
  }
  return 0.5 * (lambda_lo + lambda_hi);
}

DriveSweep sweep_drive_grid(const TwoAtomScenario& base,
                            const std::vector<double>& lambdas,
                            const std::vector<double>& omega_cs, double t_eval) {
  DriveSweep sweep{lambdas, omega_cs, {}};
  sweep.cells.reserve(lambdas.size() * omega_cs.size());

  EwlSpec phi = base.initial;
  phi.kind = EwlKind::Phi;
  EwlSpec psi = base.initial;
  psi.kind = EwlKind::Psi;
  const XState x_phi = ewl_state(phi);
  const XState x_psi = ewl_state(psi);

  for (double lambda : lambdas)
    for (double omega_c : omega_cs) {
      DrivenJCParams params = base.params;
      params.lambda = lambda;
      params.omega_c = omega_c;
      const DampingChannel ch{amplitudes(dressed_frame(params), 0, t_eval).alpha};
      sweep.cells.push_back(
          {x_log_negativity(evolve_pair(x_phi, ch, ch)).log_negativity,
           x_log_negativity(evolve_pair(x_psi, ch, ch)).log_negativity});
    }
  return sweep;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

}  // namespace drivenjc
