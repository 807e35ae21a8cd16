#include "cdare/problem.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

#include "cdare/stein.hpp"

namespace cdare {

namespace {

void check_dims(const ComplexMatrix& A, const ComplexMatrix& B,
                const ComplexMatrix& R, const ComplexMatrix& H) {
  std::ostringstream os;
  if (A.rows() != A.cols()) {
    os << "A must be square, got " << A.rows() << "x" << A.cols();
    throw DimensionError(os.str());
  }
  const Eigen::Index n = A.rows();
  if (n < 1) throw DimensionError("n must be at least 1");
  if (B.rows() != n) {
    os << "B has " << B.rows() << " rows, expected n = " << n;
    throw DimensionError(os.str());
  }
  const Eigen::Index m = B.cols();
  if (m < 1) throw DimensionError("m must be at least 1");
  if (R.rows() != m || R.cols() != m) {
    os << "R is " << R.rows() << "x" << R.cols() << ", expected " << m << "x" << m;
    throw DimensionError(os.str());
  }
  if (H.rows() != n || H.cols() != n) {
    os << "H is " << H.rows() << "x" << H.cols() << ", expected " << n << "x" << n;
    throw DimensionError(os.str());
  }
}

// Hermitian eigendecomposition wrapper used for every R_X solve: keeps the
// eigenvalues around for lambda_min / rcond diagnostics.
struct HermitianFactor {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es;
  double lambda_min = 0.0;
  double rcond = 0.0;

  explicit HermitianFactor(const ComplexMatrix& M) : es(M) {
    if (es.info() != Eigen::Success) {
      throw NumericalError("eigendecomposition of R_X failed");
    }
    const RealVector& ev = es.eigenvalues();
    lambda_min = ev.minCoeff();
    const double amax = ev.cwiseAbs().maxCoeff();
    const double amin = ev.cwiseAbs().minCoeff();
    rcond = amax == 0.0 ? 0.0 : amin / amax;
  }

  ComplexMatrix solve(const ComplexMatrix& rhs) const {
    const ComplexMatrix& V = es.eigenvectors();
    return V * es.eigenvalues().cwiseInverse().asDiagonal() *
           (V.adjoint() * rhs);
  }
};

}  // namespace

ProblemInstance::ProblemInstance(ComplexMatrix A, ComplexMatrix B, ComplexMatrix R,
                                 ComplexMatrix H, Tolerances tols)
    : A_(std::move(A)), B_(std::move(B)), tols_(tols) {
  check_dims(A_, B_, R, H);
  R_ = HermitianMatrix::require_hermitian(R, tols_.hermitian_input, "R");
  H_ = HermitianMatrix::require_hermitian(H, tols_.hermitian_input, "H");

  HermitianFactor rf(R_.matrix());
  if (rf.rcond < tols_.rcond_singular) {
    std::ostringstream os;
    os << "R is numerically singular (rcond " << rf.rcond << ")";
    throw ArgumentError(os.str());
  }
  G_ = HermitianMatrix(B_ * rf.solve(B_.adjoint()));
}

RiccatiEval riccati_eval(const ProblemInstance& P, const HermitianMatrix& X) {
  if (X.dim() != P.n()) {
    std::ostringstream os;
    os << "X is " << X.dim() << "x" << X.dim() << ", expected " << P.n() << "x" << P.n();
    throw DimensionError(os.str());
  }
  const ComplexMatrix Xc = X.matrix().conjugate();
  const ComplexMatrix RX = symmetrized(P.R().matrix() + P.B().adjoint() * Xc * P.B());

  HermitianFactor rf(RX);
  if (rf.rcond < P.tols().rcond_singular) {
    std::ostringstream os;
    os << "X outside dom(R): R_X numerically singular (rcond " << rf.rcond << ")";
    throw DomainError(os.str());
  }

  RiccatiEval ev;
  ev.rx_lambda_min = rf.lambda_min;
  ev.rx_rcond = rf.rcond;
  ev.loop.R_X = HermitianMatrix(RX);

  const ComplexMatrix W = P.B().adjoint() * Xc * P.A();  // B^H conj(X) A
  ev.loop.F = rf.solve(W);
  ev.loop.T = P.A() - P.B() * ev.loop.F;
  ev.loop.T_hat = hat(ev.loop.T);
  ev.loop.rho_T_hat = spectral_radius(ev.loop.T_hat);

  ev.image = HermitianMatrix(P.A().adjoint() * Xc * P.A() - W.adjoint() * ev.loop.F +
                             P.H().matrix());
  return ev;
}

HermitianMatrix riccati_op(const ProblemInstance& P, const HermitianMatrix& X) {
  return riccati_eval(P, X).image;
}

HermitianMatrix riccati_op_compact(const ProblemInstance& P, const HermitianMatrix& X) {
  const ComplexMatrix Xc = X.matrix().conjugate();
  const ComplexMatrix S =
      ComplexMatrix::Identity(P.n(), P.n()) + P.G().matrix() * Xc;
  Eigen::FullPivLU<ComplexMatrix> lu(S);
  if (!lu.isInvertible()) {
    throw DomainError("riccati_op_compact: I + G conj(X) is singular");
  }
  return HermitianMatrix(P.A().adjoint() * Xc * lu.solve(P.A()) + P.H().matrix());
}

ClosedLoop closed_loop(const ProblemInstance& P, const HermitianMatrix& X) {
  return riccati_eval(P, X).loop;
}

HermitianMatrix weighted_gap(const ProblemInstance& P, const HermitianMatrix& Y,
                             const HermitianMatrix& X) {
  const RiccatiEval evX = riccati_eval(P, X);
  const RiccatiEval evY = riccati_eval(P, Y);
  const ComplexMatrix D = evY.loop.F - evX.loop.F;
  return HermitianMatrix(D.adjoint() * evX.loop.R_X.matrix() * D);
}

HermitianMatrix shifted_H(const ProblemInstance& P, const HermitianMatrix& Y) {
  const ComplexMatrix& FY = riccati_eval(P, Y).loop.F;
  return HermitianMatrix(P.H().matrix() + FY.adjoint() * P.R().matrix() * FY);
}

double identity_residual(const ProblemInstance& P, const HermitianMatrix& X,
                         const HermitianMatrix& Y) {
  const RiccatiEval evX = riccati_eval(P, X);
  const RiccatiEval evY = riccati_eval(P, Y);

  const HermitianMatrix lhs = X - evX.image;

  const HermitianMatrix CTy = stein_apply(evY.loop.T, X);
  const ComplexMatrix DF = evY.loop.F - evX.loop.F;
  const HermitianMatrix K(DF.adjoint() * evX.loop.R_X.matrix() * DF);
  const HermitianMatrix HY(P.H().matrix() +
                           evY.loop.F.adjoint() * P.R().matrix() * evY.loop.F);

  return (lhs - (CTy - HY + K)).spectral_norm();
}

}  // namespace cdare
