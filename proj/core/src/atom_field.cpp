#include "drivenjc/atom_field.hpp"

#include <cmath>
#include <string>

#include "drivenjc/errors.hpp"

namespace drivenjc {
namespace {

constexpr int kMaxThermalCutoff = 8192;

double thermal_p(double mbar, int n) {
  return std::pow(mbar, n) / std::pow(1.0 + mbar, n + 1);
}

// Mass above cutoff n: (mbar/(1+mbar))^{n+1}.
double thermal_tail(double mbar, int n) {
  return std::pow(mbar / (1.0 + mbar), n + 1);
}

}  // namespace

DressedFrame dressed_frame(const DrivenJCParams& p) {
  DressedFrame f{};
  f.delta1 = p.omega0 - p.omega_c;
  const double splitting = std::sqrt(f.delta1 * f.delta1 + 4.0 * p.lambda * p.lambda);
  f.omega_prime = splitting + p.omega_c;
  f.delta2 = splitting + p.omega_c - p.omega;
  f.angle_defaulted = (p.lambda == 0.0 && f.delta1 == 0.0);
  if (f.angle_defaulted)
    f.theta = 0.0;
  else if (p.branch == MixingBranch::HalfPlane)
    f.theta = std::atan2(2.0 * p.lambda, f.delta1);
  else
    f.theta = std::atan(2.0 * p.lambda / f.delta1);
  // Half-angle identity; exact 0 in the degenerate theta = pi case.
  f.g_prime = p.g * 0.5 * (1.0 + std::cos(f.theta));
  return f;
}

Amplitudes amplitudes(const DressedFrame& f, int n, double t) {
  const double gp = f.g_prime;
  const double d2 = f.delta2;
  const double rabi = std::sqrt(0.25 * d2 * d2 + (n + 1.0) * gp * gp);
  if (rabi == 0.0) return {Complex(1.0, 0.0), Complex(0.0, 0.0), 0.0};

  const double c = std::cos(rabi * t);
  const double s = std::sin(rabi * t);
  const Complex rot = std::polar(1.0, 0.5 * d2 * t);  // e^{i delta2 t / 2}
  const Complex alpha = rot * Complex(c, -0.5 * d2 * s / rabi);
  const Complex beta =
      Complex(0.0, -1.0) * gp * std::sqrt(n + 1.0) * std::conj(rot) * (s / rabi);
  return {alpha, beta, rabi};
}

double fock_log_negativity(const DrivenJCParams& p, int n, double t) {
  const Amplitudes a = amplitudes(dressed_frame(p), n, t);
  return std::log2(1.0 + 2.0 * std::abs(a.alpha) * std::abs(a.beta));
}

DensityMatrix evolved_fock_state(const DrivenJCParams& p, int n, double t) {
  const Amplitudes a = amplitudes(dressed_frame(p), n, t);
  const int nf = n + 2;  // field basis |0> .. |n+1>
  std::vector<Complex> psi(2 * nf, Complex{});
  psi[0 * nf + n] = a.alpha;       // |+, n>
  psi[1 * nf + n + 1] = a.beta;    // |-, n+1>

  DensityMatrix rho{CMatrix(2 * nf, 2 * nf), {2, nf}};
  for (int i = 0; i < 2 * nf; ++i)
    for (int j = 0; j < 2 * nf; ++j) rho.mat(i, j) = psi[i] * std::conj(psi[j]);
  return rho;
}

ThermalWeights thermal_weights(const ThermalFieldSpec& spec) {
  const double m = spec.mean_photons;
  int n = spec.cutoff > 0 ? spec.cutoff : 0;
  while (thermal_tail(m, n) > spec.tail_tol) {
    if (++n > kMaxThermalCutoff)
      throw CutoffTooSmallError("thermal tail tolerance unreachable below cutoff " +
                                std::to_string(kMaxThermalCutoff));
  }
  ThermalWeights w;
  w.cutoff = n;
  w.raised = n != spec.cutoff;
  w.p.resize(n + 1);
  for (int k = 0; k <= n; ++k) w.p[k] = thermal_p(m, k);
  return w;
}

int thermal_state_cutoff(const ThermalFieldSpec& spec) {
  int n = thermal_weights(spec).cutoff;
  while (thermal_p(spec.mean_photons, n) > spec.tail_tol) {
    if (++n > kMaxThermalCutoff)
      throw CutoffTooSmallError("thermal tail tolerance unreachable below cutoff " +
                                std::to_string(kMaxThermalCutoff));
  }
  return n;
}

DensityMatrix evolved_thermal_state_fixed(const DrivenJCParams& p,
                                          const ThermalFieldSpec& spec, double t) {
  const DressedFrame f = dressed_frame(p);
  const int ncut = spec.cutoff;
  const int nf = ncut + 1;

  std::vector<Amplitudes> amp(nf);
  std::vector<double> pw(nf);
  for (int n = 0; n < nf; ++n) {
    amp[n] = amplitudes(f, n, t);
    pw[n] = thermal_p(spec.mean_photons, n);
  }

  // Terms referencing |ncut+1> are dropped; reject the truncation if either
  // dropped term carries more weight than the tail tolerance.
  const double dropped_pop = pw[ncut] * std::norm(amp[ncut].beta);
  const double dropped_coh =
      pw[ncut] * std::abs(amp[ncut].alpha) * std::abs(amp[ncut].beta);
  if (dropped_pop > spec.tail_tol || dropped_coh > spec.tail_tol)
    throw CutoffTooSmallError(
        "dropped weight " + std::to_string(std::max(dropped_pop, dropped_coh)) +
        " exceeds tail tolerance at cutoff " + std::to_string(ncut));

  DensityMatrix rho{CMatrix(2 * nf, 2 * nf), {2, nf}};
  auto at = [&](int atom, int n) { return atom * nf + n; };
  for (int n = 0; n < nf; ++n) {
    rho.mat(at(0, n), at(0, n)) = pw[n] * std::norm(amp[n].alpha);
    if (n > 0) rho.mat(at(1, n), at(1, n)) = pw[n - 1] * std::norm(amp[n - 1].beta);
    if (n + 1 < nf) {
      const Complex coh = pw[n] * amp[n].alpha * std::conj(amp[n].beta);
      rho.mat(at(0, n), at(1, n + 1)) = coh;
      rho.mat(at(1, n + 1), at(0, n)) = std::conj(coh);
    }
  }
  return rho;
}

DensityMatrix evolved_thermal_state(const DrivenJCParams& p,
                                    const ThermalFieldSpec& spec, double t) {
  ThermalFieldSpec eff = spec;
  eff.cutoff = thermal_state_cutoff(spec);
  return evolved_thermal_state_fixed(p, eff, t);
}

double thermal_log_negativity(const DrivenJCParams& p,
                              const ThermalFieldSpec& spec, double t) {
  const DressedFrame f = dressed_frame(p);
  const int ncut = thermal_state_cutoff(spec);

  std::vector<Amplitudes> amp(ncut + 1);
  std::vector<double> pw(ncut + 1);
  for (int n = 0; n <= ncut; ++n) {
    amp[n] = amplitudes(f, n, t);
    pw[n] = thermal_p(spec.mean_photons, n);
  }

  // Partial-transpose block for sector n couples |-, n> with |+, n+1>:
  // diagonal (p_{n-1}|beta_n|^2, p_{n+1}|alpha_{n+1}|^2), off-diagonal
  // p_n alpha_n beta*_{n+1}.  The blocks present in the truncated matrix are
  // n = 0 .. ncut-1.
  double negativity = 0.0;
  for (int n = 0; n + 1 <= ncut; ++n) {
    const double b = (n > 0) ? pw[n - 1] * std::norm(amp[n - 1].beta) : 0.0;
    const double a = pw[n + 1] * std::norm(amp[n + 1].alpha);
    const double c2 = std::norm(pw[n] * amp[n].alpha * std::conj(amp[n].beta));
    const double xi_minus =
        0.5 * (b + a - std::sqrt((b - a) * (b - a) + 4.0 * c2));
    if (xi_minus < 0.0) negativity -= xi_minus;
  }
  return std::log2(1.0 + 2.0 * negativity);
}

}  // namespace drivenjc
