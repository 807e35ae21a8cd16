#pragma once

#include <Eigen/Dense>
#include <complex>

namespace cdare {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// (M + M^H) / 2
ComplexMatrix symmetrized(const ComplexMatrix& M);

/// ||M - M^H||_max, the raw entrywise Hermitian deviation.
double hermitian_deviation(const ComplexMatrix& M);

/// Hat map M -> conj(M) * M. Throws DimensionError for non-square input.
ComplexMatrix hat(const ComplexMatrix& M);

/// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized
/// before factorization.
RealVector hermitian_eigenvalues(const ComplexMatrix& M);

double lambda_min(const ComplexMatrix& hermitian);
double lambda_max(const ComplexMatrix& hermitian);

/// Spectral norm (largest |eigenvalue|) of a Hermitian matrix.
double spectral_norm_hermitian(const ComplexMatrix& M);

/// Spectral norm (largest singular value) of a general matrix.
double spectral_norm(const ComplexMatrix& M);

/// Largest eigenvalue modulus, dense eigensolver. Throws NumericalError if
/// the solver does not converge.
double spectral_radius(const ComplexMatrix& M);

}  // namespace cdare
