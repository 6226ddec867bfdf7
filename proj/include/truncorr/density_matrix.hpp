#pragma once

#include "truncorr/linalg.hpp"

namespace truncorr {

/// A unit-trace, Hermitian, positive semidefinite operator on a bipartite
/// space. Construction validates every invariant; instances are immutable.
class DensityMatrix {
 public:
  /// Throws InputError naming the violated invariant.
  DensityMatrix(ComplexMatrix mat, BipartiteDims dims,
                const Tolerances& tol = default_tolerances());

  /// Pure state |psi><psi|; psi is normalized first (zero vector rejected).
  static DensityMatrix pure(const ComplexVector& psi, BipartiteDims dims,
                            const Tolerances& tol = default_tolerances());

  const ComplexMatrix& matrix() const { return mat_; }
  const BipartiteDims& dims() const { return dims_; }
  Index dim() const { return mat_.rows(); }

  ComplexMatrix reduced(Side keep) const { return partial_trace(mat_, dims_, keep); }
  ComplexMatrix partial_transposed(Side side) const {
    return partial_transpose(mat_, dims_, side);
  }

  /// (U_A (x) U_B) rho (U_A (x) U_B)^dagger
  DensityMatrix local_conjugated(const ComplexMatrix& uA, const ComplexMatrix& uB,
                                 const Tolerances& tol = default_tolerances()) const;

 private:
  ComplexMatrix mat_;
  BipartiteDims dims_;
};

/// rho on A|B and sigma on C|D combined as a state on the AC|BD split.
DensityMatrix split_tensor(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const Tolerances& tol = default_tolerances());

}  // namespace truncorr
