#pragma once

#include <complex>
#include <optional>

namespace cdare {

/// The scalar equation x = |a|^2 xbar / (1 + g xbar) + h with g = |b|^2 / r.
/// Only the moduli of a and b enter, so they are reduced immediately.
/// Requires |a| > 0, r > 0 and b != 0 (hence g > 0).
struct ScalarProblem {
  double abs_a;
  double abs_b;
  double r;
  double h;
  double g;

  ScalarProblem(std::complex<double> a, std::complex<double> b, double r, double h);
};

enum class ScalarCase {
  CaseI_linear,     ///< h > h_M: two roots, linear convergence to x_M
  CaseII_sublinear, ///< h == h_M: double root, t_hat = 1, sublinear decay
  CaseIII_minimal,  ///< h <= h_m: roots exist but iteration drifts to x_m
  NoRealSolution,   ///< h_m < h < h_M: negative discriminant
};

const char* case_name(ScalarCase c);

/// Closed-form quantities of the scalar problem: discriminant, the real
/// roots x_M >= x_m when they exist, the thresholds h_M and h_m, the
/// hat-values t_hat at each root, and the case label. t_left/t_right bound
/// the stability set (-inf, t_left) U (t_right, inf).
struct ScalarAnalysis {
  double D = 0.0;
  std::optional<double> x_M;
  std::optional<double> x_m;
  double h_M = 0.0;
  double h_m = 0.0;
  std::optional<double> t_hat_M;
  std::optional<double> t_hat_m;
  ScalarCase case_label = ScalarCase::NoRealSolution;
  double t_left = 0.0;
  double t_right = 0.0;
};

ScalarAnalysis analyze(const ScalarProblem& sp);

/// One application of the scalar Riccati map |a|^2 x / (1 + g x) + h.
/// Throws DomainError when 1 + g x vanishes numerically.
double scalar_step(const ScalarProblem& sp, double x);

/// Exact iterate x_k of the fixed-point sequence started at x0, evaluated
/// from the closed forms: the geometric expression when t_hat(x_M) != 1
/// (which also covers the drift to x_m when t_hat(x_M) > 1) and the
/// harmonic expression when t_hat(x_M) == 1. Throws ArgumentError when no
/// real roots exist or when x0 == x_M in the geometric branch.
double closed_form_iterate(const ScalarProblem& sp, double x0, long k);

}  // namespace cdare
