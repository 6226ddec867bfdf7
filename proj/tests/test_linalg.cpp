#include "helpers.hpp"
#include "truncorr/density_matrix.hpp"
#include "truncorr/errors.hpp"
#include "truncorr/states.hpp"

using namespace truncorr;

TEST_SUITE("linalg") {
  TEST_CASE("kron follows the A-major index convention") {
    ComplexVector a(2), b(3);
    a << 1.0, 2.0;
    b << 3.0, 5.0, 7.0;
    const ComplexVector k = kron(a, b);
    REQUIRE(k.size() == 6);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 3; ++j) CHECK(k(i * 3 + j) == a(i) * b(j));
  }

  TEST_CASE("partial traces of a product are the factors") {
    Rng rng(1);
    const ComplexMatrix ga = ginibre(2, 2, rng), gb = ginibre(3, 3, rng);
    ComplexMatrix ra = ga * ga.adjoint(), rb = gb * gb.adjoint();
    ra /= ra.trace();
    rb /= rb.trace();
    const ComplexMatrix m = kron(ra, rb);
    CHECK((partial_trace(m, {2, 3}, Side::A) - ra).norm() < 1e-14);
    CHECK((partial_trace(m, {2, 3}, Side::B) - rb).norm() < 1e-14);
  }

  TEST_CASE("partial transpose on either side") {
    const DensityMatrix rho = random_density({2, 3}, 6, 3);
    const ComplexMatrix tb = rho.partial_transposed(Side::B);
    const ComplexMatrix ta = rho.partial_transposed(Side::A);
    // transposing both sides is the full transpose
    CHECK((partial_transpose(tb, {2, 3}, Side::A) - rho.matrix().transpose()).norm() < 1e-14);
    CHECK((ta.transpose() - tb).norm() < 1e-14);
    // explicit entry check: <a b|rho^{T_B}|a' b'> = <a b'|rho|a' b>
    CHECK(std::abs(tb(0 * 3 + 1, 1 * 3 + 2) - rho.matrix()(0 * 3 + 2, 1 * 3 + 1)) < 1e-15);
  }

  TEST_CASE("hermitian_eig satisfies residual and orthonormality") {
    const DensityMatrix rho = random_density({3, 3}, 9, 4);
    const auto es = hermitian_eig(rho.matrix());
    const ComplexMatrix& v = es.vectors;
    CHECK((rho.matrix() * v - v * es.values.cast<Complex>().asDiagonal()).norm() < 1e-12);
    CHECK((v.adjoint() * v - ComplexMatrix::Identity(9, 9)).norm() < 1e-12);
    for (Index k = 1; k < es.values.size(); ++k) CHECK(es.values(k - 1) <= es.values(k));
  }

  TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), InputError);
  }

  TEST_CASE("coefficient matrix reshapes row-major") {
    const ComplexVector v = phi_p_vector(0.25);
    const ComplexMatrix c = coefficient_matrix(v, {2, 2});
    CHECK_NEAR(c(0, 0).real(), 0.5, 1e-15);
    CHECK_NEAR(c(1, 1).real(), std::sqrt(0.75), 1e-15);
    CHECK(std::abs(c(0, 1)) == 0.0);
  }

  TEST_CASE("density matrix validation") {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
    CHECK_NOTHROW(DensityMatrix(m, {2, 2}));
    CHECK_THROWS_AS(DensityMatrix(m, {2, 3}), InputError);
    CHECK_THROWS_AS(DensityMatrix(m * 2.0, {2, 2}), InputError);
    ComplexMatrix neg = m;
    neg(0, 0) = -0.1;
    neg(1, 1) = 0.6;
    CHECK_THROWS_AS(DensityMatrix(neg, {2, 2}), InputError);
    ComplexMatrix nh = m;
    nh(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix(nh, {2, 2}), InputError);
    CHECK_THROWS_AS(DensityMatrix::pure(ComplexVector::Zero(4), {2, 2}), InputError);
  }

  TEST_CASE("split_tensor reorders to AC|BD") {
    const DensityMatrix r = phi_p(0.3);
    const DensityMatrix x = split_tensor(varsigma(), r);
    CHECK(x.dims() == BipartiteDims{4, 4});
    CHECK(std::abs(x.matrix().trace() - 1.0) < 1e-14);
    // reduced state on AC is Tr_B varsigma (x) Tr_D r
    CHECK((x.reduced(Side::A) - kron(varsigma().reduced(Side::A), r.reduced(Side::A))).norm() <
          1e-14);
    CHECK((x.reduced(Side::B) - kron(varsigma().reduced(Side::B), r.reduced(Side::B))).norm() <
          1e-14);
  }
}
