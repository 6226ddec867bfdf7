#pragma once

#include <optional>
#include <vector>

#include "truncorr/spectral.hpp"

namespace truncorr {

/// Nearest integer multiple of step to x. Half-point ties resolve to the
/// lower multiple; a zero step maps everything to 0. A tie is declared when
/// x mod step lies within tie_tol * step of step/2.
double nim(double x, double step, double tie_tol = default_tolerances().tie);

/// -|x - y| * log2(x / quota); requires 0 < x <= quota (up to rounding).
double s_term(double x, double y, double quota);

/// Groups of values with one quota per group.
struct Collection {
  std::vector<std::vector<double>> groups;
  std::vector<double> quotas;

  /// Quotas set to each group's own sum.
  static Collection with_sum_quotas(std::vector<std::vector<double>> groups);
};

/// Sum of s_term over all entries, quotas taken from x.
double s_tilde(const Collection& x, const Collection& y);

struct ComponentContribution {
  double eta = 0.0;
  Index mult = 0;
  double sideA = 0.0;
  double sideB = 0.0;
};

struct SideMeasure {
  double value = 0.0;
  std::vector<double> contributions;  // one per component, same order
};

/// M^A or M^B from a list of truncated components.
SideMeasure measure_M_side(const std::vector<TruncatedComponent>& components, Side side,
                           const Tolerances& tol = default_tolerances());

struct MeasureReport {
  double M = 0.0;
  double MA = 0.0;
  double MB = 0.0;
  std::vector<ComponentContribution> per_component;
  std::optional<double> G, FA, FB;
  std::optional<double> entropyA, entropyB, entropyAB;
  std::optional<double> ppt_min_eigenvalue, negativity;
};

MeasureReport measure_M(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// measure_M plus entropies and the partial-transpose quantities.
MeasureReport measure_report(const DensityMatrix& rho, bool include_G,
                             const Tolerances& tol = default_tolerances());

/// -sum x log2 x with 0 log 0 = 0.
double shannon_entropy(const std::vector<double>& p);

/// -sum lambda log2 lambda over eigenvalues above tol.rank.
double von_neumann_entropy(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // sqrt(c_k), descending
  ComplexMatrix vectorsA;            // columns |a_k>
  ComplexMatrix vectorsB;            // columns |b_k>

  Index rank() const { return static_cast<Index>(coefficients.size()); }
};

/// |phi> = sum_k coefficients[k] |a_k>|b_k>. Rejects vectors whose norm is
/// off by more than 1e-9.
SchmidtDecomposition schmidt(const ComplexVector& pure, const BipartiteDims& dims,
                             const Tolerances& tol = default_tolerances());

double entropy_of_entanglement(const ComplexVector& pure, const BipartiteDims& dims,
                               const Tolerances& tol = default_tolerances());

/// Smallest eigenvalue of the partial transpose on B.
double ppt_min_eigenvalue(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// (||rho^{T_B}||_1 - 1) / 2
double negativity(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

}  // namespace truncorr
