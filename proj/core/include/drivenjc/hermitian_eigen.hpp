#pragma once

#include <vector>

#include "drivenjc/cmatrix.hpp"

namespace drivenjc {

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k pairs with values[k]
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices.  Converged
// when the off-diagonal Frobenius mass drops below 1e-14 x the diagonal mass;
// hard cap of 100 sweeps.  Throws NotHermitianError if the input asymmetry
// exceeds 1e-10, NoConvergenceError at the sweep cap.
EigenSystem hermitian_eigensystem(const CMatrix& m);

// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

}  // namespace drivenjc
