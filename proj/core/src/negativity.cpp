#include "drivenjc/negativity.hpp"

#include <cmath>

#include "drivenjc/errors.hpp"
#include "drivenjc/hermitian_eigen.hpp"

namespace drivenjc {

CMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
  if (rho.dims.size() != 2)
    throw BadBipartitionError("partial transpose needs exactly two subsystems");
  if (subsystem != 0 && subsystem != 1)
    throw BadBipartitionError("subsystem index must be 0 or 1");

  const int da = rho.dims[0];
  const int db = rho.dims[1];
  CMatrix out(da * db, da * db);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int c = 0; c < da; ++c)
        for (int d = 0; d < db; ++d) {
          if (subsystem == 0)
            out(a * db + b, c * db + d) = rho.mat(c * db + b, a * db + d);
          else
            out(a * db + b, c * db + d) = rho.mat(a * db + d, c * db + b);
        }
  return out;
}

NegativityResult negativity_oracle(const DensityMatrix& rho, int subsystem) {
  const CMatrix pt = partial_transpose(rho, subsystem);
  double n = 0.0;
  for (double e : hermitian_eigenvalues(pt))
    if (e < -kNegativityClip) n -= e;
  return {n, std::log2(1.0 + 2.0 * n)};
}

StateDiagnostics diagnose_state(const DensityMatrix& rho) {
  const std::vector<double> eigs = hermitian_eigenvalues(rho.mat);
  return {rho.mat.hermiticity_defect(), rho.mat.trace(),
          eigs.empty() ? 0.0 : eigs.front()};
}

}  // namespace drivenjc
