#include "truncorr/states.hpp"

#include <cmath>
#include <numbers>

namespace truncorr {

double Rng::uniform() {
  // 53 random mantissa bits, offset by half a step to exclude 0 and 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double theta = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix haar_unitary(Index dim, Rng& rng) {
  const ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  const ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  ComplexVector phases(dim);
  for (Index i = 0; i < dim; ++i) {
    const double a = std::abs(r(i, i));
    phases(i) = a > 0.0 ? r(i, i) / a : Complex(1.0, 0.0);
  }
  return q * phases.asDiagonal();
}

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

ComplexVector ket(Index dim, Index i) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(i) = 1.0;
  return v;
}

ComplexVector plus(Index dim) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(0) = kInvSqrt2;
  v(1) = kInvSqrt2;
  return v;
}

ComplexMatrix proj(const ComplexVector& v) { return v * v.adjoint(); }

ComplexVector product(const ComplexVector& a, const ComplexVector& b) { return kron(a, b); }

DensityMatrix hermitized(ComplexMatrix m, BipartiteDims dims) {
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix(std::move(m), dims);
}

ComplexVector phi_plus() { return (product(ket(2, 0), ket(2, 0)) + product(ket(2, 1), ket(2, 1))) * kInvSqrt2; }

}  // namespace

DensityMatrix varsigma() {
  const ComplexMatrix m =
      0.5 * (proj(product(ket(2, 0), ket(2, 0))) + proj(product(ket(2, 1), plus(2))));
  return DensityMatrix(m, {2, 2});
}

DensityMatrix sigma() {
  const ComplexMatrix m = (proj(product(ket(2, 0), ket(2, 0))) +
                           2.0 * proj(product(ket(2, 0), ket(2, 1))) +
                           3.0 * proj(product(ket(2, 1), plus(2)))) /
                          6.0;
  return DensityMatrix(m, {2, 2});
}

DensityMatrix sigma_prime() {
  const ComplexMatrix m = proj(phi_plus()) / 2.0 + (proj(product(ket(2, 0), ket(2, 1))) +
                                                    proj(product(ket(2, 1), ket(2, 0)))) /
                                                       4.0;
  return DensityMatrix(m, {2, 2});
}

DensityMatrix sigma_dprime() {
  const ComplexMatrix m = proj(phi_plus()) / 4.0 + (proj(product(ket(2, 0), ket(2, 1))) +
                                                    proj(product(ket(2, 1), ket(2, 0)))) *
                                                       (3.0 / 8.0);
  return DensityMatrix(m, {2, 2});
}

DensityMatrix tau() {
  auto sym = [](Index i, Index j) {
    return ((product(ket(3, i), ket(3, j)) + product(ket(3, j), ket(3, i))) * kInvSqrt2).eval();
  };
  const ComplexMatrix m = (proj(sym(0, 1)) + proj(sym(1, 2)) + proj(sym(2, 0))) / 3.0;
  return DensityMatrix(m, {3, 3});
}

DensityMatrix zeta() {
  const ComplexMatrix m =
      (proj(product(ket(4, 0), ket(4, 0))) + proj(product(plus(4), ket(4, 2))) +
       proj(product(ket(4, 2), plus(4))) + proj(product(ket(4, 3), ket(4, 3)))) /
      4.0;
  return DensityMatrix(m, {4, 4});
}

DensityMatrix zeta_prime(std::uint64_t seedA, std::uint64_t seedB) {
  Rng ra(seedA), rb(seedB);
  const ComplexMatrix uA = haar_unitary(4, ra);
  const ComplexMatrix uB = haar_unitary(4, rb);
  return zeta().local_conjugated(uA, uB);
}

DensityMatrix xi() { return split_tensor(sigma(), sigma()); }

DensityMatrix xi_prime() { return split_tensor(sigma_dprime(), sigma_dprime()); }

ComplexVector bell_vector(Index n) {
  if (n < 1) throw InputError("bell: N must be at least 1");
  ComplexVector v = ComplexVector::Zero(n * n);
  const double c = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index i = 0; i < n; ++i) v(i * n + i) = c;
  return v;
}

DensityMatrix bell(Index n) { return DensityMatrix::pure(bell_vector(n), {n, n}); }

ComplexVector phi_p_vector(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("phi_p: p must lie in [0, 1]");
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = std::sqrt(p);
  v(3) = std::sqrt(1.0 - p);
  return v;
}

DensityMatrix phi_p(double p) { return DensityMatrix::pure(phi_p_vector(p), {2, 2}); }

DensityMatrix kappa(double cx, double cy, double cz) {
  using namespace std::complex_literals;
  ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, -1i, 1i, 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  const ComplexMatrix m =
      (ComplexMatrix::Identity(4, 4) + cx * kron(sx, sx) + cy * kron(sy, sy) + cz * kron(sz, sz)) /
      4.0;
  const double lowest = std::min({1 - cx - cy - cz, 1 - cx + cy + cz, 1 + cx - cy + cz,
                                  1 + cx + cy - cz}) / 4.0;
  if (lowest < -1e-12)
    throw InputError("kappa: parameters give a negative eigenvalue " + std::to_string(lowest));
  return hermitized(m, {2, 2});
}

DensityMatrix random_density(const BipartiteDims& dims, Index rank, std::uint64_t seed) {
  if (dims.dA < 1 || dims.dB < 1) throw InputError("random_density: invalid dims");
  if (rank < 1 || rank > dims.total())
    throw InputError("random_density: rank must lie in [1, dA*dB]");
  Rng rng(seed);
  const ComplexMatrix g = ginibre(dims.total(), rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return hermitized(std::move(m), dims);
}

ComplexVector random_pure_vector(const BipartiteDims& dims, Rng& rng) {
  ComplexVector v = ginibre(dims.total(), 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix ProductBasis::reconstruct() const {
  const Index dA = localA.cols(), dB = localB.cols();
  RealVector w(dA * dB);
  for (Index j = 0; j < dA; ++j)
    for (Index k = 0; k < dB; ++k) w(j * dB + k) = weights(j, k);
  const ComplexMatrix u = kron(localA, localB);
  return u * w.cast<Complex>().asDiagonal() * u.adjoint();
}

ClassicalSample classical_from_weights(const BipartiteDims& dims, const Matrix<double>& weights,
                                       std::uint64_t seed) {
  if (weights.rows() != dims.dA || weights.cols() != dims.dB)
    throw InputError("classical_from_weights: weight matrix must be dA x dB");
  if ((weights.array() < 0.0).any() || !(weights.sum() > 0.0))
    throw InputError("classical_from_weights: weights must be nonnegative with positive sum");
  auto [uA, uB] = random_local_unitary(dims, seed);
  ProductBasis basis{std::move(uA), std::move(uB), weights / weights.sum()};
  ComplexMatrix m = basis.reconstruct();
  return {hermitized(std::move(m), dims), std::move(basis)};
}

ClassicalSample random_classical(const BipartiteDims& dims, std::uint64_t seed) {
  // The weights use a stream derived from the seed but distinct from the one
  // that draws the local bases.
  Rng rng(seed ^ 0x9E3779B97F4A7C15ull);
  Matrix<double> w(dims.dA, dims.dB);
  for (Index k = 0; k < dims.dB; ++k)
    for (Index j = 0; j < dims.dA; ++j) w(j, k) = -std::log(rng.uniform());
  return classical_from_weights(dims, w, seed);
}

std::pair<ComplexMatrix, ComplexMatrix> random_local_unitary(const BipartiteDims& dims,
                                                             std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix uA = haar_unitary(dims.dA, rng);
  ComplexMatrix uB = haar_unitary(dims.dB, rng);
  return {std::move(uA), std::move(uB)};
}

// --- catalog ---------------------------------------------------------------

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "varsigma", "sigma", "sigma_prime", "sigma_dprime", "tau",    "zeta",   "zeta_prime",
      "xi",       "xi_prime", "bell",     "phi_p",        "kappa",  "random", "random_classical"};
  return names;
}

namespace {

class ParamReader {
 public:
  explicit ParamReader(const StateSpec& spec) : spec_(spec) {}

  double real(const std::string& key, double fallback) {
    used_.push_back(key);
    auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }

  std::int64_t integer(const std::string& key, std::int64_t fallback, std::int64_t min) {
    const double v = real(key, static_cast<double>(fallback));
    if (!(std::floor(v) == v) || v < static_cast<double>(min) || v > 9.0e15)
      throw InputError(spec_.name + ": parameter " + key + " must be an integer >= " +
                       std::to_string(min));
    return static_cast<std::int64_t>(v);
  }

  void finish() const {
    for (const auto& [key, value] : spec_.params) {
      bool known = false;
      for (const auto& u : used_) known |= u == key;
      if (!known) throw InputError(spec_.name + ": unknown parameter '" + key + "'");
    }
  }

 private:
  const StateSpec& spec_;
  std::vector<std::string> used_;
};

}  // namespace

DensityMatrix build(const StateSpec& spec) {
  ParamReader p(spec);
  const std::string& n = spec.name;
  auto done = [&](DensityMatrix rho) {
    p.finish();
    return rho;
  };
  if (n == "varsigma") return done(varsigma());
  if (n == "sigma") return done(sigma());
  if (n == "sigma_prime") return done(sigma_prime());
  if (n == "sigma_dprime") return done(sigma_dprime());
  if (n == "tau") return done(tau());
  if (n == "zeta") return done(zeta());
  if (n == "xi") return done(xi());
  if (n == "xi_prime") return done(xi_prime());
  if (n == "zeta_prime") {
    const auto a = p.integer("seed_a", 1, 0);
    const auto b = p.integer("seed_b", 2, 0);
    return done(zeta_prime(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)));
  }
  if (n == "bell") return done(bell(p.integer("N", 2, 1)));
  if (n == "phi_p") return done(phi_p(p.real("p", 0.5)));
  if (n == "kappa") {
    const double cx = p.real("cx", 0.0), cy = p.real("cy", 0.0), cz = p.real("cz", 0.0);
    return done(kappa(cx, cy, cz));
  }
  if (n == "random") {
    const Index dA = p.integer("dA", 2, 1), dB = p.integer("dB", 2, 1);
    const Index rank = p.integer("rank", dA * dB, 1);
    const auto seed = p.integer("seed", 0, 0);
    return done(random_density({dA, dB}, rank, static_cast<std::uint64_t>(seed)));
  }
  if (n == "random_classical") {
    const Index dA = p.integer("dA", 2, 1), dB = p.integer("dB", 2, 1);
    const auto seed = p.integer("seed", 0, 0);
    return done(random_classical({dA, dB}, static_cast<std::uint64_t>(seed)).state);
  }
  throw InputError("unknown state name '" + n + "'");
}

}  // namespace truncorr
