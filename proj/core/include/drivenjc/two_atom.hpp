#pragma once

#include "drivenjc/cmatrix.hpp"
#include "drivenjc/negativity.hpp"

namespace drivenjc {

// Two-qubit X-form density matrix in the ordered dressed basis
// |1>=|++>, |2>=|+->, |3>=|-+>, |4>=|-->: four real populations plus the
// anti-diagonal coherences rho14, rho23.
struct XState {
  double rho11, rho22, rho33, rho44;
  Complex rho14, rho23;
};

CMatrix x_to_matrix(const XState& x);
DensityMatrix x_to_density(const XState& x);  // dims {2, 2}

// Extended Werner-like initial states: r |pure><pure| + (1-r)/4 I with
// |Phi> = mu |-+> + nu |+->  or  |Psi> = mu |--> + nu |++>.
enum class EwlKind { Phi, Psi };

struct EwlSpec {
  EwlKind kind;
  double r;  // purity in [0, 1]
  Complex mu, nu;  // |mu|^2 + |nu|^2 = 1
};

// Throws std::invalid_argument when (mu, nu) is not normalized within 1e-12
// or r is outside [0, 1].
XState ewl_state(const EwlSpec& spec);

// Dressed-basis decay channel of one atom in its vacuum cavity, parameterized
// by the n = 0 survival amplitude alpha_0(t).  Kraus pair
// {diag(alpha0, 1), sqrt(1-|alpha0|^2) |-><+|}: trace preserving, |+>
// population decays by |alpha0|^2, coherences pick up alpha0's full phase.
struct DampingChannel {
  Complex alpha0;
};

// Channel applied to a single-qubit state in the {|+>, |->} basis.
CMatrix apply_local_channel(const CMatrix& rho, const DampingChannel& ch);

// Independent channels on the two atoms.  X form is closed under this map.
XState evolve_pair(const XState& x, const DampingChannel& a, const DampingChannel& b);
CMatrix evolve_pair(const CMatrix& rho4, const DampingChannel& a, const DampingChannel& b);

// Closed-form negativity of an X state:
//   N = max{0, [sqrt((rho22-rho33)^2 + 4|rho14|^2) - rho22 - rho33] / 2}
//     + max{0, [sqrt((rho11-rho44)^2 + 4|rho23|^2) - rho11 - rho44] / 2}.
// Exact zeros, so dark periods are detected without a roundoff threshold.
NegativityResult x_log_negativity(const XState& x);

}  // namespace drivenjc
