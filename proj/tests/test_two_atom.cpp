#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "drivenjc/negativity.hpp"
#include "drivenjc/two_atom.hpp"
#include "support/test_support.hpp"

using namespace drivenjc;
using testsupport::random_density;
using testsupport::random_x_state;

namespace {

const double kMu = std::sqrt(1.0 / 6.0);
const double kNu = std::sqrt(5.0 / 6.0);

EwlSpec figure_spec(EwlKind kind, double r = 2.0 / 3.0) {
  return {kind, r, kMu, kNu};
}

Complex random_alpha0(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  return std::polar(uni(rng), 2.0 * M_PI * uni(rng));
}

// Reference map for identical channels, entry by entry.
CMatrix pair_map_reference(const CMatrix& rho, const Complex& a) {
  const double sa = std::norm(a);
  const double w = 1.0 - sa;
  CMatrix out(4, 4);
  out(0, 0) = sa * sa * rho(0, 0);
  out(1, 1) = sa * w * rho(0, 0) + sa * rho(1, 1);
  out(2, 2) = sa * w * rho(0, 0) + sa * rho(2, 2);
  out(3, 3) = w * w * rho(0, 0) + rho(3, 3) + w * (rho(1, 1) + rho(2, 2));
  out(0, 1) = a * sa * rho(0, 1);
  out(0, 2) = a * sa * rho(0, 2);
  out(0, 3) = a * a * rho(0, 3);
  out(1, 2) = sa * rho(1, 2);
  out(1, 3) = a * w * rho(0, 2) + a * rho(1, 3);
  out(2, 3) = a * w * rho(0, 1) + a * rho(2, 3);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j) out(i, j) = std::conj(out(j, i));
  return out;
}

double off_x_leakage(const CMatrix& m) {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

}  // namespace

TEST_CASE("EWL construction: Bell, maximally mixed, figure parameters") {
  const XState bell = ewl_state({EwlKind::Phi, 1.0, 1.0 / std::sqrt(2.0),
                                 1.0 / std::sqrt(2.0)});
  CHECK(x_log_negativity(bell).negativity == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(x_log_negativity(bell).log_negativity == doctest::Approx(1.0).epsilon(1e-14));

  const XState mixed = ewl_state(figure_spec(EwlKind::Phi, 0.0));
  for (double d : {mixed.rho11, mixed.rho22, mixed.rho33, mixed.rho44})
    CHECK(d == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(std::abs(mixed.rho14) == 0.0);
  CHECK(std::abs(mixed.rho23) == 0.0);

  const XState x = ewl_state(figure_spec(EwlKind::Phi));
  CHECK(x.rho11 == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(x.rho22 == doctest::Approx(23.0 / 36.0).epsilon(1e-14));
  CHECK(x.rho33 == doctest::Approx(7.0 / 36.0).epsilon(1e-14));
  CHECK(x.rho44 == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(x.rho23.real() == doctest::Approx(std::sqrt(5.0) / 9.0).epsilon(1e-14));
  CHECK(x.rho11 + x.rho22 + x.rho33 + x.rho44 == doctest::Approx(1.0).epsilon(1e-14));

  const XState psi = ewl_state(figure_spec(EwlKind::Psi));
  CHECK(psi.rho11 == doctest::Approx(23.0 / 36.0).epsilon(1e-14));
  CHECK(psi.rho44 == doctest::Approx(7.0 / 36.0).epsilon(1e-14));
  CHECK(psi.rho14.real() == doctest::Approx(std::sqrt(5.0) / 9.0).epsilon(1e-14));
  CHECK(std::abs(psi.rho23) == 0.0);
}

TEST_CASE("EWL rejects bad inputs") {
  CHECK_THROWS_AS(ewl_state({EwlKind::Phi, 0.5, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(ewl_state({EwlKind::Phi, 1.5, kMu, kNu}), std::invalid_argument);
}

TEST_CASE("local channel limits and hand-computed midpoint") {
  CMatrix plus(2, 2);
  plus(0, 0) = 1.0;

  // Unit-modulus alpha0 only rotates the coherence.
  std::mt19937_64 rng(41);
  const DensityMatrix q = random_density(2, 1, rng);
  const Complex phase = std::polar(1.0, 1.3);
  const CMatrix rotated = apply_local_channel(q.mat, {phase});
  CHECK(std::abs(rotated(0, 0) - q.mat(0, 0)) <= 1e-15);
  CHECK(std::abs(rotated(1, 1) - q.mat(1, 1)) <= 1e-15);
  CHECK(std::abs(rotated(0, 1) - phase * q.mat(0, 1)) <= 1e-15);

  // Full decay sends |+><+| to |-><-|.
  const CMatrix dead = apply_local_channel(plus, {0.0});
  CHECK(dead(0, 0) == Complex(0.0));
  CHECK(dead(1, 1) == Complex(1.0));

  // |alpha0|^2 = 1/4 on the maximally mixed qubit.
  CMatrix half = CMatrix::identity(2);
  half *= Complex(0.5);
  const CMatrix out = apply_local_channel(half, {0.5});
  CHECK(out(0, 0).real() == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(out(1, 1).real() == doctest::Approx(0.875).epsilon(1e-15));
}

TEST_CASE("local channel equals its Kraus pair and preserves trace") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix q = random_density(2, 1, rng);
    const Complex a = random_alpha0(rng);

    CMatrix k0(2, 2), k1(2, 2);
    k0(0, 0) = a;
    k0(1, 1) = 1.0;
    k1(1, 0) = std::sqrt(1.0 - std::norm(a));
    const CMatrix want = k0 * q.mat * k0.adjoint() + k1 * q.mat * k1.adjoint();

    const CMatrix got = apply_local_channel(q.mat, {a});
    CHECK(got.max_abs_diff(want) <= 1e-15);
    CHECK(std::abs(got.trace().real() - 1.0) <= 1e-14);
    CHECK(testsupport::eig2_closed(got)[0] >= -1e-14);
  }
}

TEST_CASE("channel composition multiplies survival amplitudes") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix q = random_density(2, 1, rng);
    const Complex a = random_alpha0(rng);
    const Complex b = random_alpha0(rng);
    const CMatrix two_step = apply_local_channel(apply_local_channel(q.mat, {b}), {a});
    const CMatrix one_step = apply_local_channel(q.mat, {a * b});
    CHECK(two_step.max_abs_diff(one_step) <= 1e-15);
  }
}

TEST_CASE("pair evolution limits") {
  const XState x0 = ewl_state(figure_spec(EwlKind::Phi));
  const XState frozen = evolve_pair(x0, {1.0}, {1.0});
  CHECK(x_to_matrix(frozen).max_abs_diff(x_to_matrix(x0)) <= 1e-15);

  const XState collapsed = evolve_pair(x0, {0.0}, {0.0});
  CHECK(collapsed.rho44 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(collapsed.rho11 + collapsed.rho22 + collapsed.rho33 <= 1e-14);
  CHECK(std::abs(collapsed.rho14) + std::abs(collapsed.rho23) == 0.0);
}

TEST_CASE("pair evolution matches the entrywise reference map") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = random_density(2, 2, rng);
    const Complex a = random_alpha0(rng);
    const CMatrix got = evolve_pair(rho.mat, DampingChannel{a}, DampingChannel{a});
    const CMatrix want = pair_map_reference(rho.mat, a);
    CHECK(got.max_abs_diff(want) <= 1e-12);
    CHECK(std::abs(got.trace().real() - 1.0) <= 1e-13);
  }
}

TEST_CASE("X structure is closed under the pair map") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const XState x = random_x_state(rng);
    const Complex a = random_alpha0(rng);
    const Complex b = random_alpha0(rng);

    const CMatrix full = evolve_pair(x_to_matrix(x), DampingChannel{a}, DampingChannel{b});
    CHECK(off_x_leakage(full) <= 1e-14);

    // The X-specialized route agrees with the general Kraus route.
    const XState xt = evolve_pair(x, DampingChannel{a}, DampingChannel{b});
    CHECK(full.max_abs_diff(x_to_matrix(xt)) <= 1e-14);
  }
}

TEST_CASE("Bell pair under resonant decay never dies") {
  const XState bell = ewl_state({EwlKind::Phi, 1.0, 1.0 / std::sqrt(2.0),
                                 1.0 / std::sqrt(2.0)});
  for (int i = 1; i <= 60; ++i) {
    const double t = 0.1 * i;
    const double a = std::cos(t) * std::cos(t);  // resonant survival probability
    const XState xt = evolve_pair(bell, {std::cos(t)}, {std::cos(t)});
    const double expected =
        0.5 * (std::sqrt((1.0 - a) * (1.0 - a) + a * a) - (1.0 - a));
    const NegativityResult res = x_log_negativity(xt);
    CHECK(res.negativity == doctest::Approx(expected).epsilon(1e-12));
    if (a > 1e-12) CHECK(res.negativity > 0.0);
    // Cross-check the closed form against the brute-force spectrum.
    const double oracle = negativity_oracle(x_to_density(xt), 0).negativity;
    CHECK(std::abs(res.negativity - oracle) <= 1e-12);
  }
}

TEST_CASE("X negativity: separability boundary and figure value") {
  // At t = 0 the EWL Phi state is entangled iff r|mu nu| > (1-r)/4.
  const double boundary_r = 1.0 / 3.0;
  const XState critical = ewl_state({EwlKind::Phi, boundary_r, 1.0 / std::sqrt(2.0),
                                     1.0 / std::sqrt(2.0)});
  CHECK(x_log_negativity(critical).negativity == 0.0);

  const XState x = ewl_state(figure_spec(EwlKind::Phi));
  const double expected_n = std::sqrt(5.0) / 9.0 - 1.0 / 12.0;
  const NegativityResult res = x_log_negativity(x);
  CHECK(res.negativity == doctest::Approx(expected_n).epsilon(1e-12));
  CHECK(res.negativity == doctest::Approx(0.16512).epsilon(1e-4));
  CHECK(res.log_negativity ==
        doctest::Approx(std::log2(1.0 + 2.0 * expected_n)).epsilon(1e-12));
  CHECK(std::abs(res.negativity -
                 negativity_oracle(x_to_density(x), 0).negativity) <= 1e-10);
}

TEST_CASE("X closed form equals the oracle on random states") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 2000; ++trial) {
    const XState x = random_x_state(rng);
    const double closed = x_log_negativity(x).negativity;
    const double oracle = negativity_oracle(x_to_density(x), 0).negativity;
    CHECK(std::abs(closed - oracle) <= 1e-10);
  }
}

TEST_CASE("entanglement threshold over random EWL draws") {
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 400; ++trial) {
    const double r = uni(rng);
    const double mu_sq = uni(rng);
    const EwlKind kind = (trial % 2 == 0) ? EwlKind::Phi : EwlKind::Psi;
    const EwlSpec spec{kind, r,
                       std::polar(std::sqrt(mu_sq), 2.0 * M_PI * uni(rng)),
                       std::polar(std::sqrt(1.0 - mu_sq), 2.0 * M_PI * uni(rng))};
    const double margin =
        r * std::sqrt(mu_sq * (1.0 - mu_sq)) - (1.0 - r) / 4.0;
    const double n = x_log_negativity(ewl_state(spec)).negativity;
    if (margin > 1e-12) CHECK(n > 0.0);
    else if (margin < -1e-12) CHECK(n == 0.0);
  }
}
