#pragma once

// Eigenspace truncation of a density matrix.
//
// The global spectrum is grouped into distinct eigenvalues eta_j. Each
// eigenspace yields a truncated component eta_j * sum_k |v_k><v_k| whose two
// reduced matrices carry the spectra the measure M is built from. If the
// state has a product eigenbasis, those reduced spectra consist of integer
// multiples of eta_j.

#include <vector>

#include "truncorr/density_matrix.hpp"

namespace truncorr {

/// A run of ascending values merged into one distinct eigenvalue.
struct ValueCluster {
  Index begin = 0;   // first index into the ascending value list
  Index count = 0;
  double mean = 0.0;
};

/// Greedy grouping of an ascending list: consecutive values whose gap is at
/// most eps_deg share a cluster. The representative is the member mean.
std::vector<ValueCluster> cluster_values(const RealVector& ascending, double eps_deg);

struct EigenCluster {
  double eta = 0.0;
  Index multiplicity = 0;
  ComplexMatrix vectors;  // dim x multiplicity, orthonormal columns
};

struct SpectralDecomposition {
  std::vector<EigenCluster> clusters;  // ascending eta, all eta > tol.zero
  Index kernel_dim = 0;                // eigenvalues dropped as zero
  RealVector eigenvalues;              // full ascending spectrum

  std::size_t m() const { return clusters.size(); }
};

/// Clusters the spectrum with gap threshold tol.deg and drops the kernel.
SpectralDecomposition cluster_spectrum(const DensityMatrix& rho,
                                       const Tolerances& tol = default_tolerances());

/// The truncation of a state to one eigenspace, stored through its
/// eigenvectors; matrix() materializes eta * V V^dagger.
struct TruncatedComponent {
  double eta = 0.0;
  Index mult = 0;
  ComplexMatrix vectors;
  BipartiteDims dims;
  std::vector<double> spectrumA;  // nonzero eigenvalues of Tr_B, descending
  std::vector<double> spectrumB;  // nonzero eigenvalues of Tr_A, descending

  ComplexMatrix matrix() const { return eta * (vectors * vectors.adjoint()); }
  double trace() const { return eta * static_cast<double>(mult); }
  const std::vector<double>& spectrum(Side s) const {
    return s == Side::A ? spectrumA : spectrumB;
  }
};

TruncatedComponent truncated_component(const EigenCluster& cluster, const BipartiteDims& dims,
                                       const Tolerances& tol = default_tolerances());

/// All truncated components of rho in ascending-eta order. Their matrices
/// sum back to rho.
std::vector<TruncatedComponent> decompose(const DensityMatrix& rho,
                                          const Tolerances& tol = default_tolerances());

}  // namespace truncorr
