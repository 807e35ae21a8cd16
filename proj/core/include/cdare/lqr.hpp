#pragma once

#include <iosfwd>
#include <vector>

#include "cdare/problem.hpp"

namespace cdare {

/// Closed-loop rollout of the antilinear system x_{k+1} = A conj(x_k) + B conj(u_k).
struct Trajectory {
  std::vector<ComplexVector> states;  ///< x_0 .. x_N
  std::vector<ComplexVector> inputs;  ///< u_0 .. u_{N-1}
  /// Estimate of the cost discarded by truncation: ||x_N||^2 * ||X_star||
  /// when the solution was supplied to simulate(), else ||x_N||^2.
  double truncation_tail = 0.0;
};

/// Optimal-feedback gain F = R_{X*}^{-1} B^H conj(X*) A. Requires
/// R_{X*} > 0; throws ArgumentError outside that regime.
ComplexMatrix synthesize(const ProblemInstance& P, const HermitianMatrix& X_star);

/// Rolls the system out for N steps under u_k = -F x_k, evaluating the
/// recurrence literally as x_{k+1} = A conj(x_k) + B conj(u_k). Aborts with
/// NumericalError if the state norm exceeds the overflow guard.
Trajectory simulate(const ProblemInstance& P, const ComplexMatrix& F,
                    const ComplexVector& x0, int N,
                    const HermitianMatrix* X_star = nullptr);

/// Truncated performance index sum_{k<N} (x_k^H H x_k + u_k^H R u_k).
/// Requires H >= 0 and R > 0 (the regulator regime); throws ArgumentError
/// otherwise.
double evaluate_cost(const Trajectory& traj, const HermitianMatrix& H,
                     const HermitianMatrix& R, double psd_base = 1e-9);

struct OptimalityReport {
  double cost = 0.0;           ///< truncated cost under the synthesized gain
  double predicted = 0.0;      ///< x0^H X* x0
  double gap = 0.0;            ///< |cost - predicted|
  double tail_estimate = 0.0;  ///< ||x_N||^2 * ||X*||
  bool suboptimality_ok = true;  ///< no perturbed gain beat the synthesized one
  double worst_suboptimality = 0.0;  ///< max(predicted - perturbed cost) observed
  int perturbations = 0;
};

/// Simulates with the synthesized gain, compares the truncated cost against
/// x0^H X* x0, and spot-checks that perturbed static gains never do better.
/// Requires the regulator regime and rho(T_hat_{X*}) < 1 so the tail
/// vanishes; throws ArgumentError otherwise.
OptimalityReport verify_optimality(const ProblemInstance& P, const HermitianMatrix& X_star,
                                   const ComplexVector& x0, int N);

/// Columns: k, re/im of each state component, re/im of each input
/// component, running cost.
void write_trajectory_csv(const Trajectory& traj, const HermitianMatrix& H,
                          const HermitianMatrix& R, std::ostream& out);

}  // namespace cdare
