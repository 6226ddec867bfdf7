#include "truncorr/measures.hpp"

#include <cmath>
#include <string>

#include "truncorr/partition_measure.hpp"

namespace truncorr {

double nim(double x, double step, double tie_tol) {
  if (!(x >= 0.0) || !(step >= 0.0))
    throw DomainError("nim: arguments must be nonnegative (x=" + std::to_string(x) +
                      ", step=" + std::to_string(step) + ")");
  if (step == 0.0) return 0.0;
  const double q = x / step;
  const double lower = std::floor(q);
  const double frac = q - lower;
  if (std::abs(frac - 0.5) <= tie_tol) return step * lower;
  return frac < 0.5 ? step * lower : step * (lower + 1.0);
}

double s_term(double x, double y, double quota) {
  if (!(quota > 0.0)) throw DomainError("s_term: quota must be positive");
  if (!(x > 0.0)) throw DomainError("s_term: x must be positive");
  if (!(y >= 0.0)) throw DomainError("s_term: y must be nonnegative");
  if (x > quota + 1e-9 * std::max(1.0, quota))
    throw DomainError("s_term: x exceeds its group quota");
  // x <= quota up to rounding; clamp so the term stays nonnegative.
  const double ratio = std::min(x / quota, 1.0);
  return -std::abs(x - y) * std::log2(ratio);
}

Collection Collection::with_sum_quotas(std::vector<std::vector<double>> groups) {
  Collection c;
  c.quotas.reserve(groups.size());
  for (const auto& g : groups) {
    double t = 0.0;
    for (double v : g) t += v;
    c.quotas.push_back(t);
  }
  c.groups = std::move(groups);
  return c;
}

double s_tilde(const Collection& x, const Collection& y) {
  if (x.groups.size() != y.groups.size() || x.quotas.size() != x.groups.size())
    throw DomainError("s_tilde: collections have different group structure");
  double total = 0.0;
  for (std::size_t j = 0; j < x.groups.size(); ++j) {
    const auto& xg = x.groups[j];
    const auto& yg = y.groups[j];
    if (xg.size() != yg.size())
      throw DomainError("s_tilde: group " + std::to_string(j) + " sizes differ");
    for (std::size_t i = 0; i < xg.size(); ++i) total += s_term(xg[i], yg[i], x.quotas[j]);
  }
  return total;
}

SideMeasure measure_M_side(const std::vector<TruncatedComponent>& components, Side side,
                           const Tolerances& tol) {
  SideMeasure out;
  out.contributions.reserve(components.size());
  for (const TruncatedComponent& c : components) {
    const std::vector<double>& lambda = c.spectrum(side);
    std::vector<double> predicted;
    predicted.reserve(lambda.size());
    for (double l : lambda) predicted.push_back(nim(l, c.eta, tol.tie));
    // The quota is the component trace eta*d, not the re-summed spectrum.
    const Collection x{{lambda}, {c.trace()}};
    const Collection y{{std::move(predicted)}, {c.trace()}};
    const double s = s_tilde(x, y);
    out.contributions.push_back(s);
    out.value += s;
  }
  return out;
}

MeasureReport measure_M(const DensityMatrix& rho, const Tolerances& tol) {
  const auto components = decompose(rho, tol);
  const SideMeasure a = measure_M_side(components, Side::A, tol);
  const SideMeasure b = measure_M_side(components, Side::B, tol);
  MeasureReport r;
  r.MA = a.value;
  r.MB = b.value;
  r.M = 0.5 * (r.MA + r.MB);
  r.per_component.reserve(components.size());
  for (std::size_t j = 0; j < components.size(); ++j)
    r.per_component.push_back(
        {components[j].eta, components[j].mult, a.contributions[j], b.contributions[j]});
  return r;
}

MeasureReport measure_report(const DensityMatrix& rho, bool include_G, const Tolerances& tol) {
  MeasureReport r = measure_M(rho, tol);
  r.entropyA = von_neumann_entropy(rho.reduced(Side::A), tol);
  r.entropyB = von_neumann_entropy(rho.reduced(Side::B), tol);
  r.entropyAB = von_neumann_entropy(rho.matrix(), tol);
  r.ppt_min_eigenvalue = ppt_min_eigenvalue(rho, tol);
  r.negativity = negativity(rho, tol);
  if (include_G) {
    r.FA = measure_F_side(rho, Side::A, tol);
    r.FB = measure_F_side(rho, Side::B, tol);
    r.G = std::max(*r.FA, *r.FB);
  }
  return r;
}

double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

double von_neumann_entropy(const ComplexMatrix& m, const Tolerances& tol) {
  const RealVector ev = hermitian_eigenvalues(m, tol.herm);
  double h = 0.0;
  for (Index k = 0; k < ev.size(); ++k) {
    if (ev(k) < -tol.psd)
      throw DomainError("von_neumann_entropy: negative eigenvalue " + std::to_string(ev(k)));
    if (ev(k) > tol.rank) h -= ev(k) * std::log2(ev(k));
  }
  return h;
}

SchmidtDecomposition schmidt(const ComplexVector& pure, const BipartiteDims& dims,
                             const Tolerances& tol) {
  if (pure.size() != dims.total())
    throw InputError("schmidt: vector length does not match dims");
  if (!(std::abs(pure.norm() - 1.0) <= 1e-9))
    throw DomainError("schmidt: vector is not normalized (norm " + std::to_string(pure.norm()) +
                      ")");
  const ComplexMatrix c = coefficient_matrix(pure, dims);
  Eigen::JacobiSVD<ComplexMatrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericError("schmidt: SVD failed");

  // c = U S V^dagger, hence |phi> = sum_k s_k |U_k> (x) |conj(V_k)>.
  const RealVector& s = svd.singularValues();
  Index r = 0;
  while (r < s.size() && s(r) * s(r) > tol.rank) ++r;
  SchmidtDecomposition out;
  out.coefficients.assign(s.data(), s.data() + r);
  out.vectorsA = svd.matrixU().leftCols(r);
  out.vectorsB = svd.matrixV().leftCols(r).conjugate();
  return out;
}

double entropy_of_entanglement(const ComplexVector& pure, const BipartiteDims& dims,
                               const Tolerances& tol) {
  const SchmidtDecomposition sd = schmidt(pure, dims, tol);
  std::vector<double> c;
  c.reserve(sd.coefficients.size());
  for (double s : sd.coefficients) c.push_back(s * s);
  return shannon_entropy(c);
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const Tolerances& tol) {
  return hermitian_eigenvalues(rho.partial_transposed(Side::B), tol.herm)(0);
}

double negativity(const DensityMatrix& rho, const Tolerances& tol) {
  const RealVector ev = hermitian_eigenvalues(rho.partial_transposed(Side::B), tol.herm);
  double n = 0.0;
  for (Index k = 0; k < ev.size(); ++k)
    if (ev(k) < 0.0) n -= ev(k);
  return n;
}

}  // namespace truncorr
