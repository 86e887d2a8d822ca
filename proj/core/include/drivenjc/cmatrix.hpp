#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace drivenjc {

using Complex = std::complex<double>;

// Dense row-major complex matrix.  Everything in this problem lives in
// dimension <= ~100, so there is no sparse path and no external linear
// algebra; value semantics throughout.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols)
      : rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  CMatrix adjoint() const;
  Complex trace() const;

  // Max entrywise |m - m^dagger|; 0 for exactly Hermitian input.
  double hermiticity_defect() const;
  double max_abs_diff(const CMatrix& other) const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(const Complex& s);

  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
  friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
  friend CMatrix operator*(CMatrix lhs, const Complex& s) { return lhs *= s; }
  friend CMatrix operator*(const Complex& s, CMatrix rhs) { return rhs *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

// Tensor (Kronecker) product, (ra*rb) x (ca*cb).
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Density matrix together with its subsystem split.  The matrix dimension is
// the product of dims.  Construction does not validate; diagnose_state in
// negativity.hpp reports the Hermiticity/trace/positivity numbers so callers
// and tests can check the tolerances that matter to them (truncated thermal
// states intentionally carry trace < 1).
struct DensityMatrix {
  CMatrix mat;
  std::vector<int> dims;

  int dim() const { return mat.rows(); }
};

}  // namespace drivenjc
