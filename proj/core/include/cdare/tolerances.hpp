#pragma once

namespace cdare {

/// Numerical knobs shared across the library.
///
/// Semidefinite order decisions M >= N are made as
/// lambda_min(M - N) >= -psd_base * (1 + ||M|| + ||N||); every module that
/// compares Hermitian matrices goes through this one scale.
struct Tolerances {
  /// R_X counts as singular (outside dom(R)) when the reciprocal condition
  /// number min|eig|/max|eig| falls below this.
  double rcond_singular = 1e-12;

  /// Base tolerance for semidefinite order checks, scaled by operand norms.
  double psd_base = 1e-9;

  /// stein_solve rejects rho(conj(A)A) >= 1 - rho_margin.
  double rho_margin = 1e-8;

  /// Slack allowed on rho(T_hat) <= 1 claims along converged sequences.
  double rho_slack = 1e-8;

  /// Maximum accepted Hermitian deviation (relative) for R and H inputs.
  double hermitian_input = 1e-9;

  /// Width of the h == h_M (and h == h_m) boundary in the scalar case split.
  double scalar_eq = 1e-12;
};

}  // namespace cdare
