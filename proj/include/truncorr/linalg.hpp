#pragma once

// Dense complex-matrix primitives on bipartite index spaces.
//
// Composite indices are A-major: the basis vector |a>|b> sits at a*dB + b.
// Every function here is a pure function of its arguments.

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "truncorr/errors.hpp"
#include "truncorr/tolerances.hpp"

namespace truncorr {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = Matrix<Complex>;
using ComplexVector = Vector<Complex>;
using RealVector = Vector<double>;

enum class Side { A, B };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
inline const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

struct BipartiteDims {
  Index dA = 1;
  Index dB = 1;

  Index total() const { return dA * dB; }
  Index of(Side s) const { return s == Side::A ? dA : dB; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

namespace detail {

template <typename Derived>
void require_bipartite_square(const Eigen::MatrixBase<Derived>& m, const BipartiteDims& dims,
                              const char* what) {
  if (dims.dA < 1 || dims.dB < 1)
    throw InputError(std::string(what) + ": subsystem dimensions must be positive");
  if (m.rows() != m.cols() || m.rows() != dims.total())
    throw InputError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()) + " but dims are " + std::to_string(dims.dA) +
                     "x" + std::to_string(dims.dB));
}

}  // namespace detail

/// Kronecker product, result(i*rb + k, j*cb + l) = a(i, j) * b(k, l).
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  const Index rb = b.rows(), cb = b.cols();
  Matrix<Scalar> out(a.rows() * rb, a.cols() * cb);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

/// Reduced matrix on the kept side: Tr_B m when keep == A, Tr_A m when keep == B.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_trace(const Eigen::MatrixBase<Derived>& m,
                                               const BipartiteDims& dims, Side keep) {
  detail::require_bipartite_square(m, dims, "partial_trace");
  using Scalar = typename Derived::Scalar;
  const Index dA = dims.dA, dB = dims.dB;
  if (keep == Side::A) {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(dA, dA);
    for (Index a = 0; a < dA; ++a)
      for (Index ap = 0; ap < dA; ++ap)
        for (Index b = 0; b < dB; ++b) out(a, ap) += m(a * dB + b, ap * dB + b);
    return out;
  }
  Matrix<Scalar> out = Matrix<Scalar>::Zero(dB, dB);
  for (Index a = 0; a < dA; ++a)
    out += m.block(a * dB, a * dB, dB, dB);
  return out;
}

/// Transposes the indices of one subsystem. Applying it twice is the identity.
template <typename Derived>
Matrix<typename Derived::Scalar> partial_transpose(const Eigen::MatrixBase<Derived>& m,
                                                   const BipartiteDims& dims, Side side) {
  detail::require_bipartite_square(m, dims, "partial_transpose");
  const Index dA = dims.dA, dB = dims.dB;
  Matrix<typename Derived::Scalar> out(m.rows(), m.cols());
  for (Index a = 0; a < dA; ++a)
    for (Index ap = 0; ap < dA; ++ap) {
      if (side == Side::B)
        out.block(a * dB, ap * dB, dB, dB) = m.block(a * dB, ap * dB, dB, dB).transpose();
      else
        out.block(a * dB, ap * dB, dB, dB) = m.block(ap * dB, a * dB, dB, dB);
    }
  return out;
}

/// Largest |m_ij - conj(m_ji)|; +inf for non-square input.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
struct EigenSystem {
  RealVector values;       // ascending
  Matrix<Scalar> vectors;  // column k pairs with values[k]
};

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
///
/// Backed by Eigen's tridiagonalization + implicit QL solver, which is
/// deterministic for fixed input.
template <typename Derived>
EigenSystem<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& m,
                                                    double herm_tol = default_tolerances().herm) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw InputError("hermitian_eig: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (!(defect <= herm_tol))
    throw InputError("hermitian_eig: matrix is not Hermitian (defect " + std::to_string(defect) +
                     ")");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(m.derived().eval());
  if (solver.info() != Eigen::Success)
    throw NumericError("hermitian_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Derived>
RealVector hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m,
                                 double herm_tol = default_tolerances().herm) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw InputError("hermitian_eigenvalues: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (!(defect <= herm_tol))
    throw InputError("hermitian_eigenvalues: matrix is not Hermitian (defect " +
                     std::to_string(defect) + ")");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(m.derived().eval(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("hermitian_eigenvalues: eigensolver did not converge");
  return solver.eigenvalues();
}

/// ||ab - ba||_F
template <typename DerivedA, typename DerivedB>
double commutator_fro_norm(const Eigen::MatrixBase<DerivedA>& a,
                           const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw InputError("commutator_fro_norm: dimension mismatch");
  return (a * b - b * a).norm();
}

/// Reshapes a vector on the composite space into the dA x dB coefficient
/// matrix C with C(a, b) = v(a*dB + b).
template <typename Derived>
Matrix<typename Derived::Scalar> coefficient_matrix(const Eigen::MatrixBase<Derived>& v,
                                                    const BipartiteDims& dims) {
  if (v.cols() != 1 || v.rows() != dims.total())
    throw InputError("coefficient_matrix: vector length does not match dims");
  Matrix<typename Derived::Scalar> c(dims.dA, dims.dB);
  for (Index a = 0; a < dims.dA; ++a)
    for (Index b = 0; b < dims.dB; ++b) c(a, b) = v(a * dims.dB + b);
  return c;
}

/// Entries outside the diagonal, as a Frobenius norm.
template <typename Derived>
double offdiagonal_norm(const Eigen::MatrixBase<Derived>& m) {
  double acc = 0.0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (i != j) acc += std::norm(m(i, j));
  return std::sqrt(acc);
}

}  // namespace truncorr
