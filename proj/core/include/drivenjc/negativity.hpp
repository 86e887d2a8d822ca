#pragma once

#include "drivenjc/cmatrix.hpp"

namespace drivenjc {

struct NegativityResult {
  double negativity;      // |sum of negative partial-transpose eigenvalues|
  double log_negativity;  // log2(1 + 2 N)
};

// Eigenvalues of the partial transpose inside (-kNegativityClip, 0) count as
// zero, so separable states sit exactly at N = 0 under roundoff.
inline constexpr double kNegativityClip = 1e-10;

// Transpose the indices of one subsystem of a bipartite state.  Pure entry
// permutation (bit-exact involution); Hermiticity and trace are preserved.
// Throws BadBipartitionError unless dims has exactly two entries and
// subsystem is 0 or 1.
CMatrix partial_transpose(const DensityMatrix& rho, int subsystem);

// Brute-force negativity: partial transpose, full Hermitian spectrum, sum of
// clipped negative eigenvalues.  The reference every closed form in this
// project is checked against.
NegativityResult negativity_oracle(const DensityMatrix& rho, int subsystem = 0);

// Validation numbers for a density matrix; callers pick the tolerances.
struct StateDiagnostics {
  double hermiticity_defect;
  Complex trace;
  double min_eigenvalue;
};

StateDiagnostics diagnose_state(const DensityMatrix& rho);

}  // namespace drivenjc
