#include "truncorr/density_matrix.hpp"

#include <cmath>
#include <sstream>

namespace truncorr {

DensityMatrix::DensityMatrix(ComplexMatrix mat, BipartiteDims dims, const Tolerances& tol)
    : mat_(std::move(mat)), dims_(dims) {
  detail::require_bipartite_square(mat_, dims_, "DensityMatrix");
  const double defect = hermiticity_defect(mat_);
  if (!(defect <= tol.herm)) {
    std::ostringstream os;
    os << "DensityMatrix: not Hermitian (max |m_ij - conj(m_ji)| = " << defect << ")";
    throw InputError(os.str());
  }
  const Complex tr = mat_.trace();
  if (!(std::abs(tr - Complex(1.0, 0.0)) <= tol.trace)) {
    std::ostringstream os;
    os.precision(17);
    os << "DensityMatrix: trace is " << tr.real() << " (expected 1)";
    throw InputError(os.str());
  }
  const RealVector ev = hermitian_eigenvalues(mat_, tol.herm);
  if (ev.size() > 0 && ev(0) < -tol.psd) {
    std::ostringstream os;
    os << "DensityMatrix: negative eigenvalue " << ev(0);
    throw InputError(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi, BipartiteDims dims,
                                  const Tolerances& tol) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw InputError("DensityMatrix::pure: zero vector");
  const ComplexVector v = psi / n;
  return DensityMatrix(v * v.adjoint(), dims, tol);
}

DensityMatrix DensityMatrix::local_conjugated(const ComplexMatrix& uA, const ComplexMatrix& uB,
                                              const Tolerances& tol) const {
  if (uA.rows() != dims_.dA || uA.cols() != dims_.dA || uB.rows() != dims_.dB ||
      uB.cols() != dims_.dB)
    throw InputError("local_conjugated: unitary dimensions do not match the state");
  const ComplexMatrix u = kron(uA, uB);
  ComplexMatrix out = u * mat_ * u.adjoint();
  // The product is Hermitian only up to rounding; restore it exactly.
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix(std::move(out), dims_, tol);
}

DensityMatrix split_tensor(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const Tolerances& tol) {
  const Index dA = rho.dims().dA, dB = rho.dims().dB;
  const Index dC = sigma.dims().dA, dD = sigma.dims().dB;
  const BipartiteDims out_dims{dA * dC, dB * dD};
  const Index dBD = dB * dD;
  auto index = [&](Index a, Index c, Index b, Index d) { return (a * dC + c) * dBD + b * dD + d; };

  ComplexMatrix out(out_dims.total(), out_dims.total());
  const ComplexMatrix& r = rho.matrix();
  const ComplexMatrix& s = sigma.matrix();
  for (Index a = 0; a < dA; ++a)
    for (Index b = 0; b < dB; ++b)
      for (Index ap = 0; ap < dA; ++ap)
        for (Index bp = 0; bp < dB; ++bp) {
          const Complex rv = r(a * dB + b, ap * dB + bp);
          for (Index c = 0; c < dC; ++c)
            for (Index d = 0; d < dD; ++d)
              for (Index cp = 0; cp < dC; ++cp)
                for (Index dp = 0; dp < dD; ++dp)
                  out(index(a, c, b, d), index(ap, cp, bp, dp)) =
                      rv * s(c * dD + d, cp * dD + dp);
        }
  return DensityMatrix(std::move(out), out_dims, tol);
}

}  // namespace truncorr
