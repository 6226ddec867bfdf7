#pragma once

// Polynomial-time tests for the existence of a product eigenbasis.
//
// Each test either decides (CLASSICAL / NONCLASSICAL), declines because its
// precondition fails, or is inconclusive because it only checks a necessary
// condition. classify() runs them all and reports the first decisive one.

#include <optional>
#include <string>
#include <vector>

#include "truncorr/density_matrix.hpp"
#include "truncorr/states.hpp"

namespace truncorr {

enum class Verdict { Classical, Nonclassical, Unknown };
enum class Outcome { Classical, Nonclassical, Inconclusive, NotApplicable };

const char* to_string(Verdict v);
const char* to_string(Outcome o);

struct TestResult {
  Outcome outcome = Outcome::NotApplicable;
  double witness = 0.0;
  std::string detail;
  std::optional<ProductBasis> basis;  // set with Outcome::Classical

  bool decisive() const {
    return outcome == Outcome::Classical || outcome == Outcome::Nonclassical;
  }
};

/// Every eigenvalue simple (a one-dimensional kernel is allowed): classical
/// iff every eigenvector is a product and, per side, the local factors are
/// pairwise orthogonal or equal up to phase.
TestResult detect_nondegenerate_global(const DensityMatrix& rho,
                                       const Tolerances& tol = default_tolerances());

/// Both reduced matrices nondegenerate: classical iff the product of the
/// local eigenbases diagonalizes rho.
TestResult detect_local_both_nondegenerate(const DensityMatrix& rho,
                                           const Tolerances& tol = default_tolerances());

/// Exactly one reduced matrix nondegenerate, with eigenvectors v_j: rho must
/// equal sum_j <v_j|rho|v_j> (x) |v_j><v_j| and the blocks must commute.
TestResult detect_local_one_nondegenerate(const DensityMatrix& rho,
                                          const Tolerances& tol = default_tolerances());

/// [rho, Tr_B rho (x) I] and [rho, I (x) Tr_A rho] vanish for every state
/// with a product eigenbasis. Never returns Classical.
TestResult detect_commutator(const DensityMatrix& rho,
                             const Tolerances& tol = default_tolerances());

/// A negative partial transpose certifies entanglement. Never returns Classical.
TestResult detect_npt(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// M above tol.measure. Never returns Classical.
TestResult detect_measure_witness(const DensityMatrix& rho,
                                  const Tolerances& tol = default_tolerances());

struct Evidence {
  std::string test;
  Outcome outcome = Outcome::NotApplicable;
  double witness = 0.0;
  std::string detail;
};

struct DetectionVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string decided_by;               // empty when Unknown
  std::vector<std::string> applied;     // every test attempted, in order
  std::vector<Evidence> evidence;       // one entry per attempted test
  std::optional<ProductBasis> basis;    // witnessing basis when Classical
};

/// Runs case (i), case (ii), case (iii), commutator, NPT and the M witness in
/// that order; the verdict comes from the first decisive test.
DetectionVerdict classify(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// ||rho - basis.reconstruct()||_F
double product_basis_residual(const DensityMatrix& rho, const ProductBasis& basis);

}  // namespace truncorr
