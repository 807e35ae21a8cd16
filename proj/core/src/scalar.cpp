#include "cdare/scalar.hpp"

#include <cmath>
#include <sstream>

#include "cdare/errors.hpp"

namespace cdare {

namespace {

// Width of the h == h_M / h == h_m boundary bands.
constexpr double kScalarEqTol = 1e-12;

double boundary_tol(double h, double edge) {
  return kScalarEqTol * (1.0 + std::abs(h) + std::abs(edge));
}

}  // namespace

ScalarProblem::ScalarProblem(std::complex<double> a, std::complex<double> b,
                             double r_in, double h_in)
    : abs_a(std::abs(a)), abs_b(std::abs(b)), r(r_in), h(h_in), g(0.0) {
  if (!(abs_a > 0.0)) throw ArgumentError("ScalarProblem: |a| must be positive");
  if (!(r > 0.0)) throw ArgumentError("ScalarProblem: r must be positive");
  if (!(abs_b > 0.0)) throw ArgumentError("ScalarProblem: b must be nonzero (g > 0 required)");
  g = abs_b * abs_b / r;
}

const char* case_name(ScalarCase c) {
  switch (c) {
    case ScalarCase::CaseI_linear: return "CaseI_linear";
    case ScalarCase::CaseII_sublinear: return "CaseII_sublinear";
    case ScalarCase::CaseIII_minimal: return "CaseIII_minimal";
    case ScalarCase::NoRealSolution: return "NoRealSolution";
  }
  return "Unknown";
}

ScalarAnalysis analyze(const ScalarProblem& sp) {
  const double a = sp.abs_a;
  const double g = sp.g;
  const double h = sp.h;

  ScalarAnalysis out;
  out.h_M = -(1.0 - a) * (1.0 - a) / g;
  out.h_m = -(1.0 + a) * (1.0 + a) / g;
  out.t_left = (-a - 1.0) / g;
  out.t_right = (a - 1.0) / g;

  const double p = 1.0 - a * a - g * h;  // x_M + x_m = -p / g
  out.D = p * p + 4.0 * g * h;

  const bool at_hM = std::abs(h - out.h_M) <= boundary_tol(h, out.h_M);
  const bool at_hm = std::abs(h - out.h_m) <= boundary_tol(h, out.h_m);
  if (at_hM) {
    out.case_label = ScalarCase::CaseII_sublinear;
  } else if (h > out.h_M) {
    out.case_label = ScalarCase::CaseI_linear;
  } else if (h < out.h_m || at_hm) {
    // The h == h_m boundary is grouped with the minimal-solution regime:
    // both roots sit left of -1/g there.
    out.case_label = ScalarCase::CaseIII_minimal;
  } else {
    out.case_label = ScalarCase::NoRealSolution;
  }

  if (out.case_label == ScalarCase::NoRealSolution) return out;

  const double D = std::max(out.D, 0.0);  // boundary rounding can dip below zero
  const double sqrtD = std::sqrt(D);
  double xM, xm;
  if (sqrtD == 0.0) {
    xM = xm = -p / (2.0 * g);
  } else if (p >= 0.0) {
    // -p and -sqrtD share a sign: x_m is cancellation-free, recover x_M
    // from the root product g x_M x_m = -h.
    xm = (-p - sqrtD) / (2.0 * g);
    xM = xm != 0.0 ? -h / (g * xm) : (-p + sqrtD) / (2.0 * g);
  } else {
    xM = (-p + sqrtD) / (2.0 * g);
    xm = xM != 0.0 ? -h / (g * xM) : (-p - sqrtD) / (2.0 * g);
  }
  out.x_M = xM;
  out.x_m = xm;
  out.t_hat_M = a * a / ((1.0 + g * xM) * (1.0 + g * xM));
  out.t_hat_m = a * a / ((1.0 + g * xm) * (1.0 + g * xm));
  return out;
}

double scalar_step(const ScalarProblem& sp, double x) {
  const double denom = 1.0 + sp.g * x;
  if (std::abs(denom) <= 1e-14 * (1.0 + std::abs(sp.g * x))) {
    std::ostringstream os;
    os << "scalar_step: x = " << x << " is outside the map's domain (1 + g x = 0)";
    throw DomainError(os.str());
  }
  return sp.abs_a * sp.abs_a * x / denom + sp.h;
}

double closed_form_iterate(const ScalarProblem& sp, double x0, long k) {
  if (k < 0) throw ArgumentError("closed_form_iterate: k must be nonnegative");
  const ScalarAnalysis an = analyze(sp);
  if (!an.x_M || !an.t_hat_M) {
    throw ArgumentError(
        "closed_form_iterate: no real roots, neither closed-form branch applies");
  }
  const double xM = *an.x_M;
  const double xm = *an.x_m;
  const double t_hat = *an.t_hat_M;

  if (an.case_label == ScalarCase::CaseII_sublinear) {
    // Harmonic branch, valid exactly when t_hat(x_M) = 1.
    const double c = x0 - xM;
    return xM + sp.abs_a * c / (sp.g * c * static_cast<double>(k) + sp.abs_a);
  }

  // Geometric branch; requires a nonzero x0 - x_M to form
  // s = (x0 - x_m) / (x0 - x_M).
  if (x0 == xM) {
    throw ArgumentError(
        "closed_form_iterate: x0 == x_M, geometric branch needs x0 != x_M");
  }
  const double s = (x0 - xm) / (x0 - xM);
  if (t_hat < 1.0) {
    const double tk = std::pow(t_hat, static_cast<double>(k));
    return xM + (xM - xm) * tk / (s - tk);
  }
  const double tmk = std::pow(t_hat, -static_cast<double>(k));
  return xM + (xM - xm) / (s * tmk - 1.0);
}

}  // namespace cdare
