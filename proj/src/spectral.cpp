#include "truncorr/spectral.hpp"

#include <algorithm>

namespace truncorr {

namespace {

// Eigenvalues of the reduced matrix above the rank cutoff, descending.
std::vector<double> nonzero_spectrum(const ComplexMatrix& reduced, const Tolerances& tol) {
  const RealVector ev = hermitian_eigenvalues(reduced, tol.herm);
  std::vector<double> out;
  for (Index k = ev.size() - 1; k >= 0; --k)
    if (ev(k) > tol.rank) out.push_back(ev(k));
  return out;
}

}  // namespace

std::vector<ValueCluster> cluster_values(const RealVector& ascending, double eps_deg) {
  if (!(eps_deg > 0.0)) throw DomainError("cluster_values: eps_deg must be positive");
  std::vector<ValueCluster> out;
  const Index n = ascending.size();
  Index start = 0;
  for (Index k = 1; k <= n; ++k) {
    if (k == n || ascending(k) - ascending(k - 1) > eps_deg) {
      const Index count = k - start;
      if (count > 0) out.push_back({start, count, ascending.segment(start, count).mean()});
      start = k;
    }
  }
  return out;
}

SpectralDecomposition cluster_spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  const auto eig = hermitian_eig(rho.matrix(), tol.herm);
  SpectralDecomposition out;
  out.eigenvalues = eig.values;
  for (const ValueCluster& c : cluster_values(eig.values, tol.deg)) {
    if (c.mean <= tol.zero) {
      out.kernel_dim += c.count;
      continue;
    }
    out.clusters.push_back({c.mean, c.count, eig.vectors.middleCols(c.begin, c.count)});
  }
  return out;
}

TruncatedComponent truncated_component(const EigenCluster& cluster, const BipartiteDims& dims,
                                       const Tolerances& tol) {
  if (cluster.vectors.rows() != dims.total() || cluster.vectors.cols() != cluster.multiplicity)
    throw InputError("truncated_component: cluster vectors do not match dims/multiplicity");

  // Tr_B |v><v| = C C^dagger and Tr_A |v><v| = C^T conj(C) with C the
  // coefficient matrix of v, so the full truncated matrix is never formed.
  ComplexMatrix redA = ComplexMatrix::Zero(dims.dA, dims.dA);
  ComplexMatrix redB = ComplexMatrix::Zero(dims.dB, dims.dB);
  for (Index k = 0; k < cluster.multiplicity; ++k) {
    const ComplexMatrix c = coefficient_matrix(cluster.vectors.col(k), dims);
    redA.noalias() += c * c.adjoint();
    redB.noalias() += c.transpose() * c.conjugate();
  }
  redA *= cluster.eta;
  redB *= cluster.eta;

  TruncatedComponent out;
  out.eta = cluster.eta;
  out.mult = cluster.multiplicity;
  out.vectors = cluster.vectors;
  out.dims = dims;
  out.spectrumA = nonzero_spectrum(redA, tol);
  out.spectrumB = nonzero_spectrum(redB, tol);
  return out;
}

std::vector<TruncatedComponent> decompose(const DensityMatrix& rho, const Tolerances& tol) {
  const SpectralDecomposition sd = cluster_spectrum(rho, tol);
  std::vector<TruncatedComponent> out;
  out.reserve(sd.clusters.size());
  for (const EigenCluster& c : sd.clusters) out.push_back(truncated_component(c, rho.dims(), tol));
  return out;
}

}  // namespace truncorr
