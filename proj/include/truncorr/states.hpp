#pragma once

// Named states from the worked examples, parametric families and seeded
// random ensembles.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "truncorr/density_matrix.hpp"

namespace truncorr {

/// Seedable source for every random construction in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard; the variates are derived here rather than through the
/// implementation-defined std:: distributions, so a seed means the same
/// numbers on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1).
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();
  /// Real and imaginary parts independent standard normals.
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix ginibre(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with R's diagonal phases
/// folded into Q.
ComplexMatrix haar_unitary(Index dim, Rng& rng);

struct StateSpec {
  std::string name;
  std::map<std::string, double> params;
};

/// Names accepted by build().
const std::vector<std::string>& catalog_names();

/// Builds a named state. Throws InputError for unknown names, unknown or
/// out-of-range parameters.
DensityMatrix build(const StateSpec& spec);

// Individual constructors. Kets |2>, |3> are computational basis vectors;
// |+> = (|0> + |1>)/sqrt(2) in any local dimension.
DensityMatrix varsigma();
DensityMatrix sigma();
DensityMatrix sigma_prime();
DensityMatrix sigma_dprime();
DensityMatrix tau();
DensityMatrix zeta();
DensityMatrix zeta_prime(std::uint64_t seedA, std::uint64_t seedB);
DensityMatrix xi();
DensityMatrix xi_prime();
ComplexVector bell_vector(Index n);
DensityMatrix bell(Index n);
ComplexVector phi_p_vector(double p);
DensityMatrix phi_p(double p);
/// (I (x) I + sum_j c_j sigma_j (x) sigma_j) / 4
DensityMatrix kappa(double cx, double cy, double cz);

/// Ginibre ensemble: rho = G G^dagger / tr(G G^dagger) with G of size
/// (dA*dB) x rank.
DensityMatrix random_density(const BipartiteDims& dims, Index rank, std::uint64_t seed);

/// Random pure state vector (normalized complex Gaussian).
ComplexVector random_pure_vector(const BipartiteDims& dims, Rng& rng);

/// sum_jk weights(j,k) |a_j><a_j| (x) |b_k><b_k| with a_j, b_k the columns
/// of localA, localB.
struct ProductBasis {
  ComplexMatrix localA;
  ComplexMatrix localB;
  Matrix<double> weights;  // dA x dB

  ComplexMatrix reconstruct() const;
};

struct ClassicalSample {
  DensityMatrix state;
  ProductBasis basis;
};

/// Haar-random local bases with a flat-Dirichlet probability vector.
ClassicalSample random_classical(const BipartiteDims& dims, std::uint64_t seed);

/// Same construction with caller-provided weights (normalized here).
ClassicalSample classical_from_weights(const BipartiteDims& dims, const Matrix<double>& weights,
                                       std::uint64_t seed);

std::pair<ComplexMatrix, ComplexMatrix> random_local_unitary(const BipartiteDims& dims,
                                                             std::uint64_t seed);

}  // namespace truncorr
