#include "cdare/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <sstream>

#include "cdare/errors.hpp"

namespace cdare {

ComplexMatrix symmetrized(const ComplexMatrix& M) {
  return 0.5 * (M + M.adjoint().eval());
}

double hermitian_deviation(const ComplexMatrix& M) {
  return (M - M.adjoint().eval()).cwiseAbs().maxCoeff();
}

ComplexMatrix hat(const ComplexMatrix& M) {
  if (M.rows() != M.cols()) {
    std::ostringstream os;
    os << "hat: matrix must be square, got " << M.rows() << "x" << M.cols();
    throw DimensionError(os.str());
  }
  return M.conjugate() * M;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& M) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(symmetrized(M),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: eigensolver failed to converge");
  }
  return es.eigenvalues();
}

double lambda_min(const ComplexMatrix& hermitian) {
  return hermitian_eigenvalues(hermitian).minCoeff();
}

double lambda_max(const ComplexMatrix& hermitian) {
  return hermitian_eigenvalues(hermitian).maxCoeff();
}

double spectral_norm_hermitian(const ComplexMatrix& M) {
  return hermitian_eigenvalues(M).cwiseAbs().maxCoeff();
}

double spectral_norm(const ComplexMatrix& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(M);
  return svd.singularValues()(0);
}

double spectral_radius(const ComplexMatrix& M) {
  if (M.rows() != M.cols()) {
    throw DimensionError("spectral_radius: matrix must be square");
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(M, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    std::ostringstream os;
    os << "spectral_radius: eigensolver failed on a " << M.rows() << "x"
       << M.cols() << " matrix (norm " << M.norm() << ")";
    throw NumericalError(os.str());
  }
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace cdare
