#pragma once

#include "cdare/hermitian.hpp"
#include "cdare/tolerances.hpp"

namespace cdare {

/// Immutable problem data for the conjugate discrete-time algebraic Riccati
/// equation
///
///   X = A^H conj(X) A - A^H conj(X) B (R + B^H conj(X) B)^{-1} B^H conj(X) A + H
///
/// with A (n x n), B (n x m), R (m x m Hermitian nonsingular), H (n x n
/// Hermitian) and the derived G = B R^{-1} B^H. Construction validates
/// dimensions, Hermiticity of R and H, and nonsingularity of R.
class ProblemInstance {
 public:
  ProblemInstance(ComplexMatrix A, ComplexMatrix B, ComplexMatrix R,
                  ComplexMatrix H, Tolerances tols = {});

  const ComplexMatrix& A() const { return A_; }
  const ComplexMatrix& B() const { return B_; }
  const HermitianMatrix& R() const { return R_; }
  const HermitianMatrix& H() const { return H_; }
  const HermitianMatrix& G() const { return G_; }

  Eigen::Index n() const { return A_.rows(); }
  Eigen::Index m() const { return B_.cols(); }

  const Tolerances& tols() const { return tols_; }

 private:
  ComplexMatrix A_;
  ComplexMatrix B_;
  HermitianMatrix R_;
  HermitianMatrix H_;
  HermitianMatrix G_;
  Tolerances tols_;
};

/// Per-X derived quantities: gain F_X, closed loop T_X, its hat T_hat = conj(T) T,
/// the shifted weight R_X = R + B^H conj(X) B, and rho(T_hat).
struct ClosedLoop {
  ComplexMatrix F;
  ComplexMatrix T;
  ComplexMatrix T_hat;
  HermitianMatrix R_X;
  double rho_T_hat = 0.0;
};

/// One full evaluation of the Riccati map at X, with everything the solver
/// and the membership checks reuse per step.
struct RiccatiEval {
  HermitianMatrix image;   // R(X)
  ClosedLoop loop;
  double rx_lambda_min = 0.0;
  double rx_rcond = 0.0;
};

/// Evaluates the Riccati map and the closed loop at X.
/// Throws DomainError when R_X is numerically singular (X outside dom(R)).
RiccatiEval riccati_eval(const ProblemInstance& P, const HermitianMatrix& X);

/// R(X) by the canonical difference form above, symmetrized.
HermitianMatrix riccati_op(const ProblemInstance& P, const HermitianMatrix& X);

/// R(X) by the compact form A^H conj(X) (I + G conj(X))^{-1} A + H.
/// Verification path only: requires I + G conj(X) invertible, which the
/// canonical form does not.
HermitianMatrix riccati_op_compact(const ProblemInstance& P, const HermitianMatrix& X);

/// Gain, closed-loop matrix, hat matrix and spectral radius at X.
ClosedLoop closed_loop(const ProblemInstance& P, const HermitianMatrix& X);

/// K(Y, X) = (F_Y - F_X)^H R_X (F_Y - F_X), symmetrized. Positive
/// semidefinite whenever R_X > 0.
HermitianMatrix weighted_gap(const ProblemInstance& P, const HermitianMatrix& Y,
                             const HermitianMatrix& X);

/// H_Y = H + F_Y^H R F_Y, symmetrized.
HermitianMatrix shifted_H(const ProblemInstance& P, const HermitianMatrix& Y);

/// Spectral norm of (X - R(X)) - (C_{T_Y}(X) - H_Y + K(Y, X)).
/// The two sides agree identically, so the value measures floating-point
/// error only.
double identity_residual(const ProblemInstance& P, const HermitianMatrix& X,
                         const HermitianMatrix& Y);

}  // namespace cdare
