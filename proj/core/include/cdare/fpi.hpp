#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cdare/membership.hpp"
#include "cdare/stein.hpp"

namespace cdare {

struct SolverOptions {
  /// Stop when ||X_k - R(X_k)|| <= tol_residual * (1 + ||X_k||).
  double tol_residual = 1e-12;
  int max_iter = 10000;
  /// Base tolerance for the monotonicity guard, scaled by iterate norms.
  double psd_tol = 1e-9;
  bool check_monotone = true;
  /// Enforce the positivity of R_{X_k} promised by a certified start.
  bool check_stability = true;
  bool record_trace = false;
  /// Set when X0 came from a certified S_>= construction. Only then do the
  /// monotonicity and positivity guards turn violations into hard stops;
  /// from uncertified starts they are recorded and iteration continues.
  bool x0_certified = false;
};

struct TraceEntry {
  int k = 0;
  double residual = 0.0;       ///< ||X_k - R(X_k)||
  double monotone_gap = 0.0;   ///< lambda_max(X_{k+1} - X_k); NaN on the final row
  double rho = 0.0;            ///< rho(T_hat_{X_k})
  double lambda_min_RX = 0.0;
  double step_norm = 0.0;      ///< ||X_{k+1} - X_k||; NaN on the final row
};

struct IterationTrace {
  std::vector<TraceEntry> entries;
  std::vector<HermitianMatrix> iterates;  ///< X_0 .. X_K
};

enum class SolveStatus { Converged, MaxIterExceeded, LeftDomain, MonotonicityViolated };

const char* status_name(SolveStatus s);

struct SolutionReport {
  HermitianMatrix X;
  int iterations = 0;
  double residual = 0.0;
  double rho_final = 0.0;
  std::optional<double> rate_estimate;
  SolveStatus status = SolveStatus::MaxIterExceeded;
  bool s_geq_regime = false;             ///< guarantees applied (certified start)
  std::optional<int> domain_exit_step;   ///< set with status LeftDomain
  std::optional<IterationTrace> trace;
};

/// Builds the iteration's initial matrix from a stability witness X_T:
/// X0 = C_{T_{X_T}}^{-1}(H_{X_T}), which satisfies the S_>= defining
/// inequality with equality. The construction is post-verified through
/// classify(P, X0, X_T). Throws ArgumentError when rho(T_hat_{X_T}) >= 1.
HermitianMatrix initial_matrix(const ProblemInstance& P, const HermitianMatrix& X_T);

/// Runs the fixed-point iteration X_{k+1} = R(X_k) from X0 until the
/// residual tolerance, max_iter, a domain exit, or (from a certified start)
/// a monotonicity violation. Throws DomainError when X0 itself is outside
/// dom(R); later domain exits are reported as status LeftDomain.
SolutionReport fpi_solve(const ProblemInstance& P, const HermitianMatrix& X0,
                         const SolverOptions& opts = {});

/// Empirical convergence-rate proxy: max over the last third of recorded
/// iterates of the k-th root of ||X_k - X_star||. Requires at least five
/// recorded iterates at positive distance from X_star; throws ArgumentError
/// otherwise.
double rate_estimate(const IterationTrace& trace, const HermitianMatrix& X_star);

/// Columns: k, residual, monotone_gap, rho, lambda_min_RX, step_norm.
void write_trace_csv(const IterationTrace& trace, std::ostream& out);

}  // namespace cdare
