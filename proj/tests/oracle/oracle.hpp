#pragma once

// Test-only reference values. Named states use eigendecompositions worked
// out by hand; random states use a cyclic Jacobi eigensolver written here,
// so nothing below goes through the library's spectral code.

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;

struct Component {
  double eta = 0.0;
  int mult = 0;
  std::vector<double> specA;  // nonzero eigenvalues of Tr_B of the component
  std::vector<double> specB;
};

/// Nearest multiple with ties to the lower one; 0 for y == 0.
double nim(double x, double y);
/// -|x - y| log2(x / T)
double s(double x, double y, double T);

double side_measure(const std::vector<Component>& comps, bool sideA);
double measure(const std::vector<Component>& comps);

/// Hand-derived components for the named catalog states (all but "random").
std::vector<Component> named_components(const std::string& name,
                                        const std::map<std::string, double>& params = {});

/// Components of a state whose nonzero eigenvalues are all simple, via Jacobi.
std::vector<Component> generic_components(const CMat& rho, int dA, int dB);

/// Eigenvalues (ascending) and eigenvectors (columns) of a Hermitian matrix
/// by cyclic Jacobi rotations.
void jacobi(const CMat& h, std::vector<double>& values, CMat& vectors);
std::vector<double> jacobi_values(const CMat& h);

/// Exact PT spectrum of tau, sorted ascending.
std::vector<double> tau_pt_spectrum();

/// G(sigma) = H(1/3) - H((6 - sqrt 10)/12) with H the binary entropy.
double g_sigma();

double binary_entropy(double p);

/// Closed form for |phi_p>: -min(p, 1-p) log2(p(1-p)), 0 at the endpoints.
double phi_p_M(double p);

}  // namespace oracle
