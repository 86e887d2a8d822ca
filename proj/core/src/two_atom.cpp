#include "drivenjc/two_atom.hpp"

#include <cmath>
#include <stdexcept>

namespace drivenjc {
namespace {

double decay_weight(const DampingChannel& ch) {
  // Tolerates |alpha0| marginally above 1 from roundoff.
  return std::max(0.0, 1.0 - std::norm(ch.alpha0));
}

}  // namespace

CMatrix x_to_matrix(const XState& x) {
  CMatrix m(4, 4);
  m(0, 0) = x.rho11;
  m(1, 1) = x.rho22;
  m(2, 2) = x.rho33;
  m(3, 3) = x.rho44;
  m(0, 3) = x.rho14;
  m(3, 0) = std::conj(x.rho14);
  m(1, 2) = x.rho23;
  m(2, 1) = std::conj(x.rho23);
  return m;
}

DensityMatrix x_to_density(const XState& x) { return {x_to_matrix(x), {2, 2}}; }

XState ewl_state(const EwlSpec& spec) {
  const double norm2 = std::norm(spec.mu) + std::norm(spec.nu);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("(mu, nu) must be normalized");
  if (spec.r < 0.0 || spec.r > 1.0)
    throw std::invalid_argument("purity r must lie in [0, 1]");

  const double mixed = (1.0 - spec.r) / 4.0;
  const double wmu = spec.r * std::norm(spec.mu);
  const double wnu = spec.r * std::norm(spec.nu);
  const Complex coh = spec.r * spec.nu * std::conj(spec.mu);

  XState x{};
  if (spec.kind == EwlKind::Phi) {
    x.rho11 = mixed;
    x.rho22 = mixed + wnu;
    x.rho33 = mixed + wmu;
    x.rho44 = mixed;
    x.rho23 = coh;
    x.rho14 = 0.0;
  } else {
    x.rho11 = mixed + wnu;
    x.rho22 = mixed;
    x.rho33 = mixed;
    x.rho44 = mixed + wmu;
    x.rho14 = coh;
    x.rho23 = 0.0;
  }
  return x;
}

CMatrix apply_local_channel(const CMatrix& rho, const DampingChannel& ch) {
  const Complex a = ch.alpha0;
  const double w = decay_weight(ch);
  CMatrix out(2, 2);
  out(0, 0) = std::norm(a) * rho(0, 0);
  out(1, 1) = rho(1, 1) + w * rho(0, 0);
  out(0, 1) = a * rho(0, 1);
  out(1, 0) = std::conj(a) * rho(1, 0);
  return out;
}

XState evolve_pair(const XState& x, const DampingChannel& cha, const DampingChannel& chb) {
  const double sa = std::norm(cha.alpha0);  // survival probabilities
  const double sb = std::norm(chb.alpha0);
  const double wa = decay_weight(cha);
  const double wb = decay_weight(chb);

  XState out{};
  out.rho11 = sa * sb * x.rho11;
  out.rho22 = sa * (wb * x.rho11 + x.rho22);
  out.rho33 = sb * (wa * x.rho11 + x.rho33);
  out.rho44 = wa * wb * x.rho11 + wa * x.rho22 + wb * x.rho33 + x.rho44;
  out.rho14 = cha.alpha0 * chb.alpha0 * x.rho14;
  out.rho23 = cha.alpha0 * std::conj(chb.alpha0) * x.rho23;
  return out;
}

CMatrix evolve_pair(const CMatrix& rho4, const DampingChannel& cha, const DampingChannel& chb) {
  auto kraus = [](const DampingChannel& ch) {
    CMatrix k0(2, 2), k1(2, 2);
    k0(0, 0) = ch.alpha0;
    k0(1, 1) = 1.0;
    k1(1, 0) = std::sqrt(decay_weight(ch));
    return std::pair{k0, k1};
  };
  const auto [a0, a1] = kraus(cha);
  const auto [b0, b1] = kraus(chb);

  CMatrix out(4, 4);
  for (const CMatrix* ka : {&a0, &a1})
    for (const CMatrix* kb : {&b0, &b1}) {
      const CMatrix k = kron(*ka, *kb);
      out += k * rho4 * k.adjoint();
    }
  return out;
}

NegativityResult x_log_negativity(const XState& x) {
  const double inner =
      0.5 * (std::sqrt((x.rho22 - x.rho33) * (x.rho22 - x.rho33) +
                       4.0 * std::norm(x.rho14)) -
             x.rho22 - x.rho33);
  const double outer =
      0.5 * (std::sqrt((x.rho11 - x.rho44) * (x.rho11 - x.rho44) +
                       4.0 * std::norm(x.rho23)) -
             x.rho11 - x.rho44);
  const double n = std::max(0.0, inner) + std::max(0.0, outer);
  return {n, std::log2(1.0 + 2.0 * n)};
}

}  // namespace drivenjc
