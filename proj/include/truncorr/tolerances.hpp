#pragma once

#include <cstddef>

namespace truncorr {

/// Numerical thresholds used throughout the library.
///
/// The measures are defined for exact arithmetic; every place where a
/// floating-point comparison stands in for an exact one reads its threshold
/// from here. Reports print the instance they were computed with.
struct Tolerances {
  double herm = 1e-10;      ///< max |m_ij - conj(m_ji)| for Hermitian input
  double trace = 1e-8;      ///< |tr(rho) - 1| for a density matrix
  double psd = 1e-10;       ///< eigenvalues >= -psd count as nonnegative
  double recon = 1e-9;      ///< eigen-reconstruction residual (Frobenius)
  double orth = 1e-10;      ///< eigenvector orthonormality
  double deg = 1e-9;        ///< eigenvalue gap below which values are one cluster
  double zero = 1e-10;      ///< clusters at or below this are the kernel
  double rank = 1e-10;      ///< reduced-spectrum entries at or below this are dropped
  double tie = 1e-9;        ///< nim half-point detection, relative to the step
  double offdiag = 1e-8;    ///< off-diagonal residual for basis tests
  double comm = 1e-8;       ///< commutator Frobenius norm treated as zero
  double local = 1e-8;      ///< local-vector overlap "orthogonal or equal" band
  double measure = 1e-7;    ///< M above this is a nonclassicality witness
  std::size_t partition_limit = 16;  ///< max dA*dB for the partition measure G
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace truncorr
