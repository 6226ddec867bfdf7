#include "truncorr/detect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "truncorr/measures.hpp"
#include "truncorr/spectral.hpp"

namespace truncorr {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Classical: return "CLASSICAL";
    case Verdict::Nonclassical: return "NONCLASSICAL";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Classical: return "CLASSICAL";
    case Outcome::Nonclassical: return "NONCLASSICAL";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
    case Outcome::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

double product_basis_residual(const DensityMatrix& rho, const ProductBasis& basis) {
  return (rho.matrix() - basis.reconstruct()).norm();
}

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double min_gap(const RealVector& ascending) {
  double g = std::numeric_limits<double>::infinity();
  for (Index k = 1; k < ascending.size(); ++k) g = std::min(g, ascending(k) - ascending(k - 1));
  return g;
}

bool nondegenerate(const RealVector& ascending, const Tolerances& tol) {
  return min_gap(ascending) > tol.deg;
}

TestResult not_applicable(std::string why) {
  TestResult r;
  r.outcome = Outcome::NotApplicable;
  r.detail = std::move(why);
  return r;
}

// Weights are the diagonal of rho in the product basis; the basis is only
// reported if it reproduces rho.
TestResult classical_if_verified(const DensityMatrix& rho, ComplexMatrix uA, ComplexMatrix uB,
                                 const Tolerances& tol, std::string detail) {
  const Index dA = rho.dims().dA, dB = rho.dims().dB;
  const ComplexMatrix u = kron(uA, uB);
  const ComplexMatrix rotated = u.adjoint() * rho.matrix() * u;
  ProductBasis basis{std::move(uA), std::move(uB), Matrix<double>(dA, dB)};
  for (Index j = 0; j < dA; ++j)
    for (Index k = 0; k < dB; ++k) basis.weights(j, k) = rotated(j * dB + k, j * dB + k).real();
  const double residual = product_basis_residual(rho, basis);
  TestResult r;
  r.witness = residual;
  if (residual <= tol.offdiag) {
    r.outcome = Outcome::Classical;
    r.detail = std::move(detail);
    r.basis = std::move(basis);
  } else {
    r.outcome = Outcome::Inconclusive;
    r.detail = fmt("candidate product basis failed verification (residual %.3g)", residual);
  }
  return r;
}

// Groups local factors that agree up to phase. If two factors are neither
// orthogonal nor equal, `consistent` is false and `worst_overlap` holds the
// overlap of the pair farthest from both.
struct LocalGrouping {
  ComplexMatrix representatives;
  double worst_overlap = 0.0;
  bool consistent = true;
};

LocalGrouping group_local_vectors(const std::vector<ComplexVector>& vs, const Tolerances& tol) {
  LocalGrouping g;
  double worst_violation = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const double ov = std::abs(vs[i].dot(vs[j]));
      const double violation = std::min(ov, 1.0 - ov);
      if (violation > tol.local && violation > worst_violation) {
        worst_violation = violation;
        g.worst_overlap = ov;
        g.consistent = false;
      }
    }
  if (!g.consistent) return g;
  std::vector<ComplexVector> reps;
  for (const ComplexVector& v : vs) {
    bool seen = false;
    for (const ComplexVector& r : reps) seen |= 1.0 - std::abs(r.dot(v)) <= tol.local;
    if (!seen) reps.push_back(v);
  }
  g.representatives.resize(vs.empty() ? 0 : vs.front().size(), static_cast<Index>(reps.size()));
  for (std::size_t k = 0; k < reps.size(); ++k) g.representatives.col(k) = reps[k];
  return g;
}

// Common eigenbasis of pairwise-commuting Hermitian matrices by successive
// refinement of eigenspaces.
ComplexMatrix simultaneous_eigenbasis(const std::vector<ComplexMatrix>& ms, Index dim,
                                      const Tolerances& tol) {
  std::vector<ComplexMatrix> spaces{ComplexMatrix::Identity(dim, dim)};
  for (const ComplexMatrix& m : ms) {
    std::vector<ComplexMatrix> refined;
    for (const ComplexMatrix& q : spaces) {
      ComplexMatrix h = q.adjoint() * m * q;
      h = (0.5 * (h + h.adjoint())).eval();
      const auto eig = hermitian_eig(h, tol.herm);
      const ComplexMatrix rotated = q * eig.vectors;
      for (const ValueCluster& c : cluster_values(eig.values, tol.deg))
        refined.push_back(rotated.middleCols(c.begin, c.count));
    }
    spaces = std::move(refined);
  }
  ComplexMatrix out(dim, dim);
  Index col = 0;
  for (const ComplexMatrix& q : spaces) {
    out.middleCols(col, q.cols()) = q;
    col += q.cols();
  }
  return out;
}

}  // namespace

TestResult detect_nondegenerate_global(const DensityMatrix& rho, const Tolerances& tol) {
  const auto eig = hermitian_eig(rho.matrix(), tol.herm);
  if (!nondegenerate(eig.values, tol))
    return not_applicable(fmt("global spectrum is degenerate (smallest gap %.3g)",
                              min_gap(eig.values)));
  const BipartiteDims& dims = rho.dims();
  std::vector<ComplexVector> as, bs;
  for (Index k = 0; k < eig.vectors.cols(); ++k) {
    const ComplexMatrix c = coefficient_matrix(eig.vectors.col(k), dims);
    Eigen::JacobiSVD<ComplexMatrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& s = svd.singularValues();
    const double second = s.size() > 1 ? s(1) : 0.0;
    if (second > tol.local) {
      TestResult r;
      r.outcome = Outcome::Nonclassical;
      r.witness = second;
      r.detail = fmt("case (i): eigenvector %.0f has Schmidt rank >= 2 (second coefficient %.6g)",
                     static_cast<double>(k), second);
      return r;
    }
    as.push_back(svd.matrixU().col(0));
    bs.push_back(svd.matrixV().col(0).conjugate());
  }
  const LocalGrouping ga = group_local_vectors(as, tol);
  const LocalGrouping gb = group_local_vectors(bs, tol);
  if (!ga.consistent || !gb.consistent) {
    TestResult r;
    r.outcome = Outcome::Nonclassical;
    const bool on_a = !ga.consistent;
    r.witness = on_a ? ga.worst_overlap : gb.worst_overlap;
    r.detail = std::string("case (i): local vectors neither orthogonal nor equal on side ") +
               (on_a ? "A" : "B") + fmt(" (overlap %.6g)", r.witness);
    return r;
  }
  if (ga.representatives.cols() != dims.dA || gb.representatives.cols() != dims.dB) {
    TestResult r;
    r.outcome = Outcome::Inconclusive;
    r.detail = "case (i): local factors do not span the local spaces";
    return r;
  }
  return classical_if_verified(rho, ga.representatives, gb.representatives, tol,
                               "case (i): all eigenvectors are products of orthonormal local "
                               "vectors");
}

TestResult detect_local_both_nondegenerate(const DensityMatrix& rho, const Tolerances& tol) {
  const auto ea = hermitian_eig(rho.reduced(Side::A), tol.herm);
  const auto eb = hermitian_eig(rho.reduced(Side::B), tol.herm);
  if (!nondegenerate(ea.values, tol) || !nondegenerate(eb.values, tol))
    return not_applicable(fmt("a reduced spectrum is degenerate (gaps A %.3g, B %.3g)",
                              min_gap(ea.values), min_gap(eb.values)));
  const ComplexMatrix u = kron(ea.vectors, eb.vectors);
  const double off = offdiagonal_norm(u.adjoint() * rho.matrix() * u);
  if (off > tol.offdiag) {
    TestResult r;
    r.outcome = Outcome::Nonclassical;
    r.witness = off;
    r.detail = fmt("case (ii): local eigenbases leave off-diagonal weight %.6g", off);
    return r;
  }
  return classical_if_verified(rho, ea.vectors, eb.vectors, tol,
                               "case (ii): product of local eigenbases diagonalizes the state");
}

TestResult detect_local_one_nondegenerate(const DensityMatrix& rho, const Tolerances& tol) {
  const auto ea = hermitian_eig(rho.reduced(Side::A), tol.herm);
  const auto eb = hermitian_eig(rho.reduced(Side::B), tol.herm);
  const bool ndA = nondegenerate(ea.values, tol), ndB = nondegenerate(eb.values, tol);
  if (ndA == ndB)
    return not_applicable(ndA ? "both reduced spectra are nondegenerate"
                              : "both reduced spectra are degenerate");
  const Side fixed = ndB ? Side::B : Side::A;  // side whose eigenbasis is unique
  const BipartiteDims& dims = rho.dims();
  const ComplexMatrix& basis = ndB ? eb.vectors : ea.vectors;
  const Index free_dim = dims.of(other(fixed));

  std::vector<ComplexMatrix> blocks;
  ComplexMatrix rebuilt = ComplexMatrix::Zero(dims.total(), dims.total());
  const ComplexMatrix id = ComplexMatrix::Identity(free_dim, free_dim);
  for (Index j = 0; j < basis.cols(); ++j) {
    const ComplexMatrix v = basis.col(j);
    const ComplexMatrix embed = fixed == Side::B ? kron(id, v) : kron(v, id);
    ComplexMatrix block = embed.adjoint() * rho.matrix() * embed;
    block = (0.5 * (block + block.adjoint())).eval();
    const ComplexMatrix pv = v * v.adjoint();
    rebuilt += fixed == Side::B ? kron(block, pv) : kron(pv, block);
    blocks.push_back(std::move(block));
  }
  const double residual = (rho.matrix() - rebuilt).norm();
  if (residual > tol.offdiag) {
    TestResult r;
    r.outcome = Outcome::Nonclassical;
    r.witness = residual;
    r.detail = std::string("case (iii): state is not block diagonal in the eigenbasis of side ") +
               side_name(fixed) + fmt(" (residual %.6g)", residual);
    return r;
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      worst = std::max(worst, commutator_fro_norm(blocks[i], blocks[j]));
  if (worst > tol.comm) {
    TestResult r;
    r.outcome = Outcome::Nonclassical;
    r.witness = worst;
    r.detail = fmt("case (iii): conditional blocks do not commute (norm %.6g)", worst);
    return r;
  }
  ComplexMatrix common = simultaneous_eigenbasis(blocks, free_dim, tol);
  const std::string detail = std::string("case (iii): side ") + side_name(fixed) +
                             " eigenbasis with commuting conditional blocks";
  if (fixed == Side::B) return classical_if_verified(rho, std::move(common), basis, tol, detail);
  return classical_if_verified(rho, basis, std::move(common), tol, detail);
}

TestResult detect_commutator(const DensityMatrix& rho, const Tolerances& tol) {
  const BipartiteDims& dims = rho.dims();
  const ComplexMatrix idA = ComplexMatrix::Identity(dims.dA, dims.dA);
  const ComplexMatrix idB = ComplexMatrix::Identity(dims.dB, dims.dB);
  const double ca = commutator_fro_norm(rho.matrix(), kron(rho.reduced(Side::A), idB));
  const double cb = commutator_fro_norm(rho.matrix(), kron(idA, rho.reduced(Side::B)));
  TestResult r;
  r.witness = std::max(ca, cb);
  if (r.witness > tol.comm) {
    r.outcome = Outcome::Nonclassical;
    r.detail = fmt("commutator: ||[rho, rho_A x I]|| = %.6g, ||[rho, I x rho_B]|| = %.6g", ca, cb);
  } else {
    r.outcome = Outcome::Inconclusive;
    r.detail = "commutator: both commutators vanish (necessary condition only)";
  }
  return r;
}

TestResult detect_npt(const DensityMatrix& rho, const Tolerances& tol) {
  const double lowest = ppt_min_eigenvalue(rho, tol);
  TestResult r;
  r.witness = lowest;
  if (lowest < -tol.psd) {
    r.outcome = Outcome::Nonclassical;
    r.detail = fmt("NPT: min eigenvalue %.6g", lowest);
  } else {
    r.outcome = Outcome::Inconclusive;
    r.detail = fmt("NPT: partial transpose is positive (min eigenvalue %.3g)", lowest);
  }
  return r;
}

TestResult detect_measure_witness(const DensityMatrix& rho, const Tolerances& tol) {
  const double m = measure_M(rho, tol).M;
  TestResult r;
  r.witness = m;
  if (m > tol.measure) {
    r.outcome = Outcome::Nonclassical;
    r.detail = fmt("M witness: M = %.6g", m);
  } else {
    r.outcome = Outcome::Inconclusive;
    r.detail = fmt("M witness: M = %.3g does not exceed the threshold", m);
  }
  return r;
}

DetectionVerdict classify(const DensityMatrix& rho, const Tolerances& tol) {
  using TestFn = TestResult (*)(const DensityMatrix&, const Tolerances&);
  static const std::pair<const char*, TestFn> tests[] = {
      {"case (i)", &detect_nondegenerate_global},
      {"case (ii)", &detect_local_both_nondegenerate},
      {"case (iii)", &detect_local_one_nondegenerate},
      {"commutator", &detect_commutator},
      {"NPT", &detect_npt},
      {"M witness", &detect_measure_witness},
  };
  DetectionVerdict v;
  for (const auto& [name, fn] : tests) {
    TestResult r = fn(rho, tol);
    v.applied.emplace_back(name);
    const std::string prefix = std::string(name) + ": ";
    if (r.detail.rfind(prefix, 0) != 0) r.detail = prefix + r.detail;
    v.evidence.push_back({name, r.outcome, r.witness, r.detail});
    if (v.verdict != Verdict::Unknown || !r.decisive()) continue;
    v.verdict = r.outcome == Outcome::Classical ? Verdict::Classical : Verdict::Nonclassical;
    v.decided_by = name;
    v.basis = std::move(r.basis);
  }
  return v;
}

}  // namespace truncorr
