#pragma once

#include <stdexcept>

namespace drivenjc {

// Matrix handed to the Hermitian eigensolver is not square or not Hermitian
// within tolerance.
struct NotHermitianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jacobi sweep cap reached without meeting the off-diagonal target.  This
// signals a conditioning bug, not a user error.
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Partial transpose requested on a state that is not a bipartition.
struct BadBipartitionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated thermal state would drop a term heavier than the tail tolerance.
struct CutoffTooSmallError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Critical-drive search endpoints do not bracket the predicate.
struct BracketInvalidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Figure id outside the shipped catalogue.
struct UnknownFigureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace drivenjc
