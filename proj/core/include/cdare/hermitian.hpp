#pragma once

#include <string>

#include "cdare/errors.hpp"
#include "cdare/linalg.hpp"

namespace cdare {

/// Hermitian matrix value type. Every constructor symmetrizes, so a stored
/// instance satisfies X == X^H exactly; arithmetic between instances
/// re-symmetrizes the result. This keeps semidefinite order comparisons
/// meaningful after long chains of floating-point updates.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  /// Symmetrizes (M + M^H)/2. Throws DimensionError for non-square input.
  explicit HermitianMatrix(const ComplexMatrix& M);

  static HermitianMatrix zero(Eigen::Index n);
  static HermitianMatrix identity(Eigen::Index n);
  static HermitianMatrix scaled_identity(Eigen::Index n, double tau);

  /// Validates that M is Hermitian within tol * (1 + ||M||_max) before
  /// accepting it; throws ArgumentError naming `label` otherwise.
  static HermitianMatrix require_hermitian(const ComplexMatrix& M, double tol,
                                           const std::string& label);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  Complex coeff(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  /// Real (0,0) entry; only meaningful for 1x1 embeddings of scalar problems.
  double scalar_value() const;

  RealVector eigenvalues() const;
  double lambda_min() const;
  double lambda_max() const;
  double spectral_norm() const;

  HermitianMatrix operator-() const;
  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

 private:
  ComplexMatrix m_;
};

/// Threshold used for the order decision a >= b: psd_base * (1 + ||a|| + ||b||).
double psd_threshold(double psd_base, const HermitianMatrix& a, const HermitianMatrix& b);

/// lambda_min(a - b) >= -psd_threshold(psd_base, a, b)
bool psd_geq(const HermitianMatrix& a, const HermitianMatrix& b, double psd_base);

}  // namespace cdare
