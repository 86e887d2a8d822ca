#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drivenjc/atom_field.hpp"
#include "drivenjc/errors.hpp"
#include "drivenjc/hermitian_eigen.hpp"
#include "drivenjc/negativity.hpp"
#include "support/test_support.hpp"

using namespace drivenjc;
using testsupport::random_params;

namespace {

// Fig-1-style parameter sets reused across the suite.
const DrivenJCParams kUndriven{5.0, 1.0, 0.0, 1.0, 0.0, MixingBranch::HalfPlane};
const DrivenJCParams kDriven{5.0, 1.0, 2.0, 1.0, 2.0, MixingBranch::HalfPlane};

DrivenJCParams resonant_params() {
  // omega = omega0, no drive: delta2 = 0 and g' = g.
  return {1.0, 1.0, 0.0, 1.0, 0.0, MixingBranch::HalfPlane};
}

}  // namespace

TEST_CASE("undriven limit reduces to the plain Jaynes-Cummings frame") {
  const DressedFrame f = dressed_frame(kUndriven);
  CHECK(f.theta == 0.0);
  CHECK(f.g_prime == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.delta2 == doctest::Approx(-4.0).epsilon(1e-15));
  CHECK(f.omega_prime == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f.delta1 == 1.0);
  CHECK(!f.angle_defaulted);
}

TEST_CASE("driven frame, half-plane branch") {
  const DressedFrame f = dressed_frame(kDriven);
  CHECK(f.delta1 == -1.0);
  CHECK(f.theta == doctest::Approx(M_PI - std::atan(4.0)).epsilon(1e-14));
  CHECK(f.theta == doctest::Approx(1.81577).epsilon(1e-5));
  // cos^2(theta/2) = (1 + cos theta)/2 with cos theta = -1/sqrt(17).
  const double expected_gp = 0.5 * (1.0 - 1.0 / std::sqrt(17.0));
  CHECK(f.g_prime == doctest::Approx(expected_gp).epsilon(1e-14));
  CHECK(f.g_prime == doctest::Approx(0.37873).epsilon(1e-4));
  CHECK(f.delta2 == doctest::Approx(std::sqrt(17.0) - 3.0).epsilon(1e-14));
  CHECK(f.omega_prime - kDriven.omega_c ==
        doctest::Approx(std::sqrt(17.0)).epsilon(1e-14));
}

TEST_CASE("driven frame, principal branch") {
  DrivenJCParams p = kDriven;
  p.branch = MixingBranch::Principal;
  const DressedFrame f = dressed_frame(p);
  CHECK(f.theta == doctest::Approx(std::atan(-4.0)).epsilon(1e-14));
  CHECK(f.g_prime == doctest::Approx(0.5 * (1.0 + 1.0 / std::sqrt(17.0))).epsilon(1e-14));
  CHECK(f.g_prime == doctest::Approx(0.62127).epsilon(1e-4));
  // delta2 does not depend on the branch.
  CHECK(f.delta2 == doctest::Approx(std::sqrt(17.0) - 3.0).epsilon(1e-14));
}

TEST_CASE("undefined mixing angle is defaulted and flagged") {
  const DrivenJCParams p{5.0, 1.0, 1.0, 1.0, 0.0, MixingBranch::HalfPlane};
  const DressedFrame f = dressed_frame(p);
  CHECK(f.angle_defaulted);
  CHECK(f.theta == 0.0);
}

TEST_CASE("half-plane angle picks the upper dressed eigenvector") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const DrivenJCParams p = random_params(rng);
    const DressedFrame f = dressed_frame(p);
    if (f.angle_defaulted) continue;

    // (cos(theta/2), sin(theta/2)) against (delta1/2) sigma_z + lambda sigma_x.
    const double c = std::cos(0.5 * f.theta);
    const double s = std::sin(0.5 * f.theta);
    const double eig = 0.5 * std::sqrt(f.delta1 * f.delta1 + 4.0 * p.lambda * p.lambda);
    const double r0 = 0.5 * f.delta1 * c + p.lambda * s - eig * c;
    const double r1 = p.lambda * c - 0.5 * f.delta1 * s - eig * s;
    CHECK(std::abs(r0) <= 1e-12);
    CHECK(std::abs(r1) <= 1e-12);
  }
}

TEST_CASE("amplitudes at t = 0 and on resonance") {
  const DressedFrame f = dressed_frame(kDriven);
  const Amplitudes a0 = amplitudes(f, 3, 0.0);
  CHECK(a0.alpha == Complex(1.0, 0.0));
  CHECK(a0.beta == Complex(0.0, 0.0));
  CHECK(a0.rabi > 0.0);

  const DressedFrame res = dressed_frame(resonant_params());
  REQUIRE(res.delta2 == 0.0);
  for (double t : {0.3, 1.7, 4.0}) {
    const Amplitudes a = amplitudes(res, 0, t);
    CHECK(std::abs(a.alpha - Complex(std::cos(res.g_prime * t), 0.0)) <= 1e-14);
    CHECK(std::abs(a.beta - Complex(0.0, -std::sin(res.g_prime * t))) <= 1e-14);
  }
}

TEST_CASE("vacuum Rabi peak of the undriven detuned atom") {
  // Omega_0 = sqrt(5); |beta_1|^2 tops out at g'^2/Omega_0^2 = 1/5.
  const DressedFrame f = dressed_frame(kUndriven);
  const double t = M_PI / (2.0 * std::sqrt(5.0));
  const Amplitudes a = amplitudes(f, 0, t);
  CHECK(a.rabi == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
  CHECK(std::norm(a.beta) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::norm(a.alpha) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("amplitudes stay normalized over random parameter draws") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const DrivenJCParams p = random_params(rng);
    const int n = static_cast<int>(uni(rng) * 21.0);
    const double t = 50.0 * uni(rng);
    const Amplitudes a = amplitudes(dressed_frame(p), n, t);
    CHECK(std::abs(std::norm(a.alpha) + std::norm(a.beta) - 1.0) <= 1e-12);
  }
}

TEST_CASE("degenerate g' = 0 channel stays disentangled") {
  // lambda = 0 with omega_c above omega0 flips theta to pi and kills g'.
  const DrivenJCParams p{5.0, 1.0, 3.0, 1.0, 0.0, MixingBranch::HalfPlane};
  const DressedFrame f = dressed_frame(p);
  CHECK(f.theta == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(f.g_prime <= 1e-30);
  for (double t : {0.5, 2.0, 9.0}) {
    const Amplitudes a = amplitudes(f, 0, t);
    CHECK(std::abs(a.beta) == 0.0);
    CHECK(std::abs(std::abs(a.alpha) - 1.0) <= 1e-14);
    CHECK(fock_log_negativity(p, 0, t) == 0.0);
  }
}

TEST_CASE("fock log-negativity endpoints and maximum") {
  CHECK(fock_log_negativity(kDriven, 0, 0.0) == 0.0);

  // Full entanglement at the resonant quarter period.
  const DrivenJCParams res = resonant_params();
  const double gp = dressed_frame(res).g_prime;
  CHECK(fock_log_negativity(res, 0, M_PI / (4.0 * gp)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // Undriven detuned n = 0: |alpha beta| caps at sqrt(0.2 * 0.8) = 0.4.
  const double analytic_max = std::log2(1.8);
  double grid_max = 0.0;
  for (int i = 0; i <= 2000; ++i)
    grid_max = std::max(grid_max, fock_log_negativity(kUndriven, 0, 10.0 * i / 2000.0));
  CHECK(grid_max <= analytic_max + 1e-12);
  CHECK(grid_max == doctest::Approx(analytic_max).epsilon(1e-5));
  CHECK(analytic_max == doctest::Approx(0.84800).epsilon(1e-5));
}

TEST_CASE("fock closed form agrees with the brute-force oracle") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const DrivenJCParams p = random_params(rng);
    const int n = static_cast<int>(uni(rng) * 21.0);
    const double t = 50.0 * uni(rng);
    const double closed = fock_log_negativity(p, n, t);
    const double oracle =
        negativity_oracle(evolved_fock_state(p, n, t), 0).log_negativity;
    CHECK(std::abs(closed - oracle) <= 1e-9);
  }
}

TEST_CASE("fock entanglement is periodic on resonance") {
  const DrivenJCParams res = resonant_params();
  const double omega0 = amplitudes(dressed_frame(res), 0, 0.0).rabi;
  for (double t : {0.1, 0.9, 2.3}) {
    const double now = fock_log_negativity(res, 0, t);
    const double later = fock_log_negativity(res, 0, t + M_PI / omega0);
    CHECK(std::abs(now - later) <= 1e-10);
  }
}

TEST_CASE("thermal weights: vacuum, unit mean, geometric tail") {
  const ThermalWeights vac = thermal_weights({0.0, 4, 1e-12});
  CHECK(vac.cutoff == 4);
  CHECK(vac.p[0] == 1.0);
  for (int n = 1; n <= 4; ++n) CHECK(vac.p[n] == 0.0);

  const ThermalWeights unit = thermal_weights({1.0, 0, 1e-12});
  for (int n = 0; n <= std::min(unit.cutoff, 10); ++n)
    CHECK(unit.p[n] == doctest::Approx(std::pow(2.0, -(n + 1))).epsilon(1e-14));

  // mbar = 0.1: p_0 = 1/1.1 and the smallest adequate cutoff satisfies
  // (mbar/(1+mbar))^{N+1} <= 1e-12, which the geometric tail puts at N = 11.
  const ThermalWeights w = thermal_weights({0.1, 0, 1e-12});
  CHECK(w.p[0] == doctest::Approx(1.0 / 1.1).epsilon(1e-14));
  CHECK(w.raised);
  CHECK(w.cutoff == 11);
  CHECK(std::pow(0.1 / 1.1, w.cutoff + 1) <= 1e-12);
  CHECK(std::pow(0.1 / 1.1, w.cutoff) > 1e-12);

  double total = 0.0;
  for (double pn : w.p) total += pn;
  CHECK(1.0 - total <= 1e-12);
}

TEST_CASE("thermal state at mbar = 0 is the pure vacuum evolution") {
  for (double t : {0.4, 1.0, 3.3}) {
    const DensityMatrix th = evolved_thermal_state(kUndriven, {0.0, 0, 1e-12}, t);
    const DensityMatrix pure = evolved_fock_state(kUndriven, 0, t);
    REQUIRE(th.dims == pure.dims);
    CHECK(th.mat.max_abs_diff(pure.mat) <= 1e-14);

    const auto eigs = hermitian_eigenvalues(th.mat);
    int rank = 0;
    for (double e : eigs)
      if (e > 1e-12) ++rank;
    CHECK(rank == 1);
  }
}

TEST_CASE("thermal state at t = 0 is |+><+| x diagonal field") {
  const ThermalFieldSpec spec{0.3, 0, 1e-12};
  const DensityMatrix rho = evolved_thermal_state(kDriven, spec, 0.0);
  const int nf = rho.dims[1];
  for (int n = 0; n < nf; ++n) {
    const double pn = std::pow(0.3, n) / std::pow(1.3, n + 1);
    CHECK(rho.mat(n, n).real() == doctest::Approx(pn).epsilon(1e-14));
    CHECK(std::abs(rho.mat(nf + n, nf + n)) == 0.0);
  }
  double offdiag = 0.0;
  for (int i = 0; i < 2 * nf; ++i)
    for (int j = 0; j < 2 * nf; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(rho.mat(i, j)));
  CHECK(offdiag == 0.0);
}

TEST_CASE("truncated thermal state is a near-unit-trace positive state") {
  const ThermalFieldSpec spec{0.3, 0, 1e-12};
  for (double t : {0.7, 2.0, 6.1}) {
    const DensityMatrix rho = evolved_thermal_state(kDriven, spec, t);
    const StateDiagnostics d = diagnose_state(rho);
    CHECK(d.hermiticity_defect <= 1e-14);
    CHECK(d.min_eigenvalue >= -1e-10);
    // Trace equals the kept weight mass up to the dropped boundary terms.
    double kept = 0.0;
    for (int n = 0; n < rho.dims[1]; ++n)
      kept += std::pow(0.3, n) / std::pow(1.3, n + 1);
    CHECK(std::abs(d.trace.real() - kept) <= 1e-12);
    CHECK(1.0 - kept <= 1e-12);
  }
}

TEST_CASE("thermal closed form tracks the oracle") {
  CHECK(thermal_log_negativity(kDriven, {0.1, 0, 1e-12}, 0.0) == 0.0);

  // Single-term series: mbar = 0 collapses onto the vacuum Fock case.
  for (double t : {0.5, 1.2, 7.7})
    CHECK(std::abs(thermal_log_negativity(kUndriven, {0.0, 0, 1e-12}, t) -
                   fock_log_negativity(kUndriven, 0, t)) <= 1e-14);

  for (double mbar : {0.1, 0.3, 1.0}) {
    const ThermalFieldSpec spec{mbar, 0, 1e-12};
    for (int i = 0; i < 25; ++i) {
      const double t = 10.0 * i / 24.0;
      const double closed = thermal_log_negativity(kDriven, spec, t);
      const double oracle =
          negativity_oracle(evolved_thermal_state(kDriven, spec, t), 0).log_negativity;
      CHECK(std::abs(closed - oracle) <= 1e-8);
    }
  }
}

TEST_CASE("hotter fields carry less peak entanglement") {
  auto peak = [](double mbar) {
    double best = 0.0;
    for (int i = 0; i <= 2000; ++i)
      best = std::max(best, thermal_log_negativity(kUndriven, {mbar, 0, 1e-12},
                                                   10.0 * i / 2000.0));
    return best;
  };
  CHECK(peak(0.3) < peak(0.1));
}

TEST_CASE("too-small explicit cutoff is rejected") {
  ThermalFieldSpec spec{0.5, 1, 1e-12};
  // Near the first beta peak the dropped coherence carries real weight.
  CHECK_THROWS_AS(evolved_thermal_state_fixed(kUndriven, spec, 0.7),
                  CutoffTooSmallError);
}
