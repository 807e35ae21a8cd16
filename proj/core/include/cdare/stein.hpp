#pragma once

#include "cdare/hermitian.hpp"

namespace cdare {

/// Data for the conjugate Stein equation C_A(X) = Q with
/// C_A(X) = X - A^H conj(X) A.
struct SteinProblem {
  ComplexMatrix A;
  HermitianMatrix Q;
};

/// C_A(X) = X - A^H conj(X) A, symmetrized.
HermitianMatrix stein_apply(const ComplexMatrix& A, const HermitianMatrix& X);

/// S_M(Y) = Y - M^H Y M, symmetrized (no conjugation of the unknown).
HermitianMatrix standard_stein_apply(const ComplexMatrix& M, const HermitianMatrix& Y);

struct SteinSolution {
  HermitianMatrix X;
  double rho = 0.0;        ///< spectral radius of conj(A) A
  double rcond = 0.0;      ///< reciprocal condition estimate of the linear system
  bool conditioning_warning = false;
  double residual = 0.0;   ///< || C_A(X) - Q ||
};

/// Solves C_A(X) = Q for the unique Hermitian X under rho(conj(A)A) < 1.
///
/// Substituting the conjugated equation into itself reduces the problem to
/// one standard Stein equation X - M^H X M = Q + A^H conj(Q) A with
/// M = conj(A) A, which is solved as a dense linear system on the
/// real/imaginary split of vec(X) (2 n^2 real unknowns). The conjugation
/// makes C_A real-linear but not complex-linear, so the unreduced equation
/// admits no plain complex Kronecker solve.
///
/// Throws DomainError when rho(conj(A)A) >= 1 - rho_margin; an
/// ill-conditioned linear system sets conditioning_warning on the result.
SteinSolution stein_solve(const ComplexMatrix& A, const HermitianMatrix& Q,
                          double rho_margin = 1e-8);

SteinSolution stein_solve(const SteinProblem& sp, double rho_margin = 1e-8);

}  // namespace cdare
