#include "cdare/stein.hpp"

#include <Eigen/LU>
#include <sstream>

namespace cdare {

namespace {

void check_square_match(const ComplexMatrix& A, const HermitianMatrix& X,
                        const char* op) {
  if (A.rows() != A.cols() || A.rows() != X.dim()) {
    std::ostringstream os;
    os << op << ": dimension mismatch, A is " << A.rows() << "x" << A.cols()
       << ", argument is " << X.dim() << "x" << X.dim();
    throw DimensionError(os.str());
  }
}

}  // namespace

HermitianMatrix stein_apply(const ComplexMatrix& A, const HermitianMatrix& X) {
  check_square_match(A, X, "stein_apply");
  return HermitianMatrix(X.matrix() - A.adjoint() * X.matrix().conjugate() * A);
}

HermitianMatrix standard_stein_apply(const ComplexMatrix& M, const HermitianMatrix& Y) {
  check_square_match(M, Y, "standard_stein_apply");
  return HermitianMatrix(Y.matrix() - M.adjoint() * Y.matrix() * M);
}

SteinSolution stein_solve(const ComplexMatrix& A, const HermitianMatrix& Q,
                          double rho_margin) {
  check_square_match(A, Q, "stein_solve");
  const Eigen::Index n = A.rows();

  const ComplexMatrix M = A.conjugate() * A;
  const double rho = spectral_radius(M);
  if (rho >= 1.0 - rho_margin) {
    std::ostringstream os;
    os << "stein_solve: rho(conj(A)A) = " << rho
       << " >= 1, series divergence / operator not invertible by this method";
    throw DomainError(os.str());
  }

  // Reduced right-hand side Q + A^H conj(Q) A (Hermitian).
  const ComplexMatrix Qt =
      symmetrized(Q.matrix() + A.adjoint() * Q.matrix().conjugate() * A);

  // Complex operator of the reduced standard Stein equation:
  // C = I - kron(M^T, M^H), so that C vec(X) = vec(X - M^H X M).
  const Eigen::Index nn = n * n;
  ComplexMatrix C = ComplexMatrix::Identity(nn, nn);
  const ComplexMatrix Mh = M.adjoint();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      C.block(j * n, l * n, n, n) -= M(l, j) * Mh;
    }
  }

  // Real/imaginary split: 2 n^2 real unknowns.
  const Eigen::Index N = 2 * nn;
  RealMatrix S(N, N);
  S.topLeftCorner(nn, nn) = C.real();
  S.topRightCorner(nn, nn) = -C.imag();
  S.bottomLeftCorner(nn, nn) = C.imag();
  S.bottomRightCorner(nn, nn) = C.real();

  ComplexVector q = Eigen::Map<const ComplexVector>(Qt.data(), nn);
  RealVector rhs(N);
  rhs.head(nn) = q.real();
  rhs.tail(nn) = q.imag();

  Eigen::PartialPivLU<RealMatrix> lu(S);
  const RealVector z = lu.solve(rhs);

  ComplexVector xv(nn);
  xv.real() = z.head(nn);
  xv.imag() = z.tail(nn);

  SteinSolution sol;
  sol.X = HermitianMatrix(Eigen::Map<const ComplexMatrix>(xv.data(), n, n));
  sol.rho = rho;
  sol.rcond = lu.rcond();
  sol.conditioning_warning = sol.rcond < 1e-10;
  sol.residual = (stein_apply(A, sol.X) - Q).spectral_norm();
  return sol;
}

SteinSolution stein_solve(const SteinProblem& sp, double rho_margin) {
  return stein_solve(sp.A, sp.Q, rho_margin);
}

}  // namespace cdare
