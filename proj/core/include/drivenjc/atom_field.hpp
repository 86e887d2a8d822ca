#pragma once

#include <vector>

#include "drivenjc/cmatrix.hpp"

namespace drivenjc {

// Convention for the mixing angle theta = arctan(2 lambda / delta1), which is
// ambiguous when delta1 < 0.  HalfPlane takes the two-argument angle of
// (delta1, 2 lambda), keeping |+> the upper dressed state for every sign
// combination; Principal takes the single-argument arctangent literally.
enum class MixingBranch { HalfPlane, Principal };

// Raw model parameters: one two-level atom in a single-mode cavity, driven by
// a classical field.  hbar = 1; times in units of 1/g (g = 1 by default).
struct DrivenJCParams {
  double omega;    // cavity frequency
  double omega0;   // atomic frequency
  double omega_c;  // classical drive frequency
  double g;        // atom-cavity coupling, > 0
  double lambda;   // atom-drive coupling, >= 0
  MixingBranch branch = MixingBranch::HalfPlane;

  friend bool operator==(const DrivenJCParams&, const DrivenJCParams&) = default;
};

struct DressedFrame {
  double theta;        // mixing angle
  double delta1;       // omega0 - omega_c
  double delta2;       // sqrt(delta1^2 + 4 lambda^2) + omega_c - omega
  double omega_prime;  // sqrt(delta1^2 + 4 lambda^2) + omega_c
  double g_prime;      // g cos^2(theta/2)
  bool angle_defaulted;  // lambda = 0 and delta1 = 0: theta set to 0 by convention
};

DressedFrame dressed_frame(const DrivenJCParams& p);

// Evolution amplitudes for the initial state |+, n>: alpha multiplies
// |+, n>, beta multiplies |-, n+1>, rabi is the generalized frequency
// Omega_n = sqrt(delta2^2/4 + (n+1) g'^2).  |alpha|^2 + |beta|^2 = 1.
struct Amplitudes {
  Complex alpha;
  Complex beta;
  double rabi;
};

Amplitudes amplitudes(const DressedFrame& f, int n, double t);

// log2(1 + 2 |alpha_n beta_{n+1}|) for the atom starting in |+> and the
// cavity in Fock state |n|.  Always in [0, 1].
double fock_log_negativity(const DrivenJCParams& p, int n, double t);

// The same pure state as an explicit density matrix in the (2 x (n+2)) space,
// dims = {2, n+2}; atom basis ordered {|+>, |->}.
DensityMatrix evolved_fock_state(const DrivenJCParams& p, int n, double t);

// Thermal cavity field: geometric number distribution with mean mean_photons,
// truncated at `cutoff` (raised automatically until the dropped mass fits
// inside tail_tol).
struct ThermalFieldSpec {
  double mean_photons;
  int cutoff = 0;
  double tail_tol = 1e-12;

  friend bool operator==(const ThermalFieldSpec&, const ThermalFieldSpec&) = default;
};

struct ThermalWeights {
  std::vector<double> p;  // p_0 .. p_cutoff
  int cutoff;
  bool raised;  // cutoff was raised beyond the requested one
};

// Weights p_n = mbar^n / (1+mbar)^{n+1} up to the smallest cutoff >= the
// requested one whose tail mass is <= tail_tol.
ThermalWeights thermal_weights(const ThermalFieldSpec& spec);

// Cutoff used for truncated state matrices: additionally requires the
// boundary weight p_N <= tail_tol so that every dropped matrix element
// (populations and coherences referencing |N+1>) is below tolerance.
int thermal_state_cutoff(const ThermalFieldSpec& spec);

// Joint atom-field state at time t for an initial |+><+| x thermal field, in
// the ordered basis {|+>, |->} x {|0> .. |N>}, dims = {2, N+1}.  The
// truncated state is NOT renormalized.  This overload honors spec.cutoff
// exactly and throws CutoffTooSmallError if a dropped term outweighs
// tail_tol.
DensityMatrix evolved_thermal_state_fixed(const DrivenJCParams& p,
                                          const ThermalFieldSpec& spec, double t);

// Same, with the cutoff from thermal_state_cutoff.
DensityMatrix evolved_thermal_state(const DrivenJCParams& p,
                                    const ThermalFieldSpec& spec, double t);

// Closed-form log-negativity of the truncated thermal state: the partial
// transpose decouples into 2x2 blocks, one per photon sector, and the
// negative root of each block accumulates into E = log2(1 + sum(|xi|-xi)).
// Matches negativity_oracle(evolved_thermal_state(...)) to machine precision
// because both see the same truncation.
double thermal_log_negativity(const DrivenJCParams& p,
                              const ThermalFieldSpec& spec, double t);

}  // namespace drivenjc
