#include "cdare/hermitian.hpp"

#include <sstream>

namespace cdare {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& M) {
  if (M.rows() != M.cols()) {
    std::ostringstream os;
    os << "HermitianMatrix: expected square matrix, got " << M.rows() << "x"
       << M.cols();
    throw DimensionError(os.str());
  }
  m_ = symmetrized(M);
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index n) {
  HermitianMatrix out;
  out.m_ = ComplexMatrix::Zero(n, n);
  return out;
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
  HermitianMatrix out;
  out.m_ = ComplexMatrix::Identity(n, n);
  return out;
}

HermitianMatrix HermitianMatrix::scaled_identity(Eigen::Index n, double tau) {
  HermitianMatrix out;
  out.m_ = tau * ComplexMatrix::Identity(n, n);
  return out;
}

HermitianMatrix HermitianMatrix::require_hermitian(const ComplexMatrix& M, double tol,
                                                   const std::string& label) {
  if (M.rows() != M.cols()) {
    throw ArgumentError(label + ": expected a square matrix");
  }
  const double dev = hermitian_deviation(M);
  const double scale = 1.0 + M.cwiseAbs().maxCoeff();
  if (dev > tol * scale) {
    std::ostringstream os;
    os << label << ": not Hermitian (deviation " << dev << ", allowed "
       << tol * scale << ")";
    throw ArgumentError(os.str());
  }
  return HermitianMatrix(M);
}

double HermitianMatrix::scalar_value() const {
  if (dim() != 1) {
    throw ArgumentError("scalar_value: matrix is not 1x1");
  }
  return m_(0, 0).real();
}

RealVector HermitianMatrix::eigenvalues() const { return hermitian_eigenvalues(m_); }

double HermitianMatrix::lambda_min() const { return eigenvalues().minCoeff(); }

double HermitianMatrix::lambda_max() const { return eigenvalues().maxCoeff(); }

double HermitianMatrix::spectral_norm() const {
  if (m_.size() == 0) return 0.0;
  return eigenvalues().cwiseAbs().maxCoeff();
}

HermitianMatrix HermitianMatrix::operator-() const {
  HermitianMatrix out;
  out.m_ = -m_;
  return out;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ + b.m_);
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ - b.m_);
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
  HermitianMatrix out;
  out.m_ = s * a.m_;
  return out;
}

double psd_threshold(double psd_base, const HermitianMatrix& a, const HermitianMatrix& b) {
  return psd_base * (1.0 + a.spectral_norm() + b.spectral_norm());
}

bool psd_geq(const HermitianMatrix& a, const HermitianMatrix& b, double psd_base) {
  return (a - b).lambda_min() >= -psd_threshold(psd_base, a, b);
}

}  // namespace cdare
