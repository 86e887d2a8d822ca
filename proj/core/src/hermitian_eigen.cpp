#include "drivenjc/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "drivenjc/errors.hpp"

namespace drivenjc {
namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kOffDiagRatio = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_mass(const CMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double diagonal_mass(const CMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) s += a(i, i).real() * a(i, i).real();
  return std::sqrt(s);
}

// One rotation zeroing the (p,q) pair.  The phase factor turns the pivot
// real, then a standard real Jacobi rotation eliminates it.
void rotate(CMatrix& a, CMatrix& v, int p, int q) {
  const Complex apq = a(p, q);
  const double mpq = std::abs(apq);
  if (mpq == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const Complex phase = apq / mpq;  // e^{i phi}

  const double tau = (aqq - app) / (2.0 * mpq);
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.rows();
  const Complex phase_conj = std::conj(phase);

  // Columns: A <- A * W with W = [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
  for (int k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  // Rows: A <- W^dagger * A.
  for (int k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  // Pivot pair from the closed-form update; kills roundoff drift.
  a(p, p) = Complex(app - t * mpq, 0.0);
  a(q, q) = Complex(aqq + t * mpq, 0.0);
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (int k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_conj * vkq;
    v(k, q) = s * vkp + c * phase_conj * vkq;
  }
}

}  // namespace

EigenSystem hermitian_eigensystem(const CMatrix& m) {
  if (m.rows() != m.cols()) throw NotHermitianError("matrix is not square");
  if (m.hermiticity_defect() > kHermitianTol)
    throw NotHermitianError("matrix asymmetry exceeds 1e-10");

  const int n = m.rows();
  CMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  CMatrix v = CMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_mass(a) <= kOffDiagRatio * diagonal_mass(a)) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_mass(a) > kOffDiagRatio * diagonal_mass(a))
    throw NoConvergenceError("Jacobi sweep cap reached");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem sys;
  sys.values.resize(n);
  sys.vectors = CMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    sys.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) sys.vectors(i, k) = v(i, order[k]);
  }
  return sys;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  return hermitian_eigensystem(m).values;
}

}  // namespace drivenjc
