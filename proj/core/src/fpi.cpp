#include "cdare/fpi.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace cdare {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate_options(const SolverOptions& opts) {
  if (!(opts.tol_residual > 0.0)) {
    throw ArgumentError("SolverOptions: tol_residual must be positive");
  }
  if (opts.max_iter < 1) {
    throw ArgumentError("SolverOptions: max_iter must be at least 1");
  }
}

void append_csv_value(std::string& line, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

}  // namespace

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterExceeded: return "MaxIterExceeded";
    case SolveStatus::LeftDomain: return "LeftDomain";
    case SolveStatus::MonotonicityViolated: return "MonotonicityViolated";
  }
  return "Unknown";
}

HermitianMatrix initial_matrix(const ProblemInstance& P, const HermitianMatrix& X_T) {
  const RiccatiEval evW = riccati_eval(P, X_T);
  if (!(evW.loop.rho_T_hat < 1.0)) {
    std::ostringstream os;
    os << "initial_matrix: witness not in T, rho(T_hat_{X_T}) = " << evW.loop.rho_T_hat;
    throw ArgumentError(os.str());
  }
  const HermitianMatrix HW(P.H().matrix() +
                           evW.loop.F.adjoint() * P.R().matrix() * evW.loop.F);
  const SteinSolution sol = stein_solve(evW.loop.T, HW, P.tols().rho_margin);

  const MembershipReport rep = classify(P, sol.X, X_T);
  if (!rep.in_S_geq || !rep.in_S_geq->member) {
    std::ostringstream os;
    os << "initial_matrix: constructed X0 failed the S_>= post-verification (margin "
       << (rep.in_S_geq ? rep.in_S_geq->margin : kNaN) << ")";
    throw NumericalError(os.str());
  }
  return sol.X;
}

SolutionReport fpi_solve(const ProblemInstance& P, const HermitianMatrix& X0,
                         const SolverOptions& opts) {
  validate_options(opts);

  SolutionReport rep;
  rep.s_geq_regime = opts.x0_certified;
  IterationTrace trace;

  HermitianMatrix X = X0;
  for (int k = 0;; ++k) {
    RiccatiEval ev;
    try {
      ev = riccati_eval(P, X);
    } catch (const DomainError&) {
      if (k == 0) throw;  // X0 outside dom(R) is a precondition violation
      TraceEntry entry{k, kNaN, kNaN, kNaN, kNaN, kNaN};
      // R_X itself is always computable; only its inversion failed.
      const ComplexMatrix RX = symmetrized(
          P.R().matrix() + P.B().adjoint() * X.matrix().conjugate() * P.B());
      entry.lambda_min_RX = lambda_min(RX);
      trace.entries.push_back(entry);
      if (opts.record_trace) trace.iterates.push_back(X);
      rep.X = X;
      rep.iterations = k;
      rep.residual = kNaN;
      rep.rho_final = kNaN;
      rep.status = SolveStatus::LeftDomain;
      rep.domain_exit_step = k;
      break;
    }

    const double xnorm = X.spectral_norm();
    const HermitianMatrix diff = X - ev.image;
    const double residual = diff.spectral_norm();

    trace.entries.push_back(
        {k, residual, kNaN, ev.loop.rho_T_hat, ev.rx_lambda_min, kNaN});
    if (opts.record_trace) trace.iterates.push_back(X);

    rep.X = X;
    rep.iterations = k;
    rep.residual = residual;
    rep.rho_final = ev.loop.rho_T_hat;

    if (residual <= opts.tol_residual * (1.0 + xnorm)) {
      rep.status = SolveStatus::Converged;
      break;
    }
    if (opts.check_stability && opts.x0_certified && ev.rx_lambda_min <= 0.0) {
      // The certified regime promises R_{X_k} > 0 along the sequence.
      rep.status = SolveStatus::LeftDomain;
      rep.domain_exit_step = k;
      break;
    }
    if (k == opts.max_iter) {
      rep.status = SolveStatus::MaxIterExceeded;
      break;
    }

    const HermitianMatrix& X_next = ev.image;
    const RealVector step_eigs = (X_next - X).eigenvalues();
    const double gap = step_eigs.maxCoeff();
    const double step_norm = step_eigs.cwiseAbs().maxCoeff();
    trace.entries.back().monotone_gap = gap;
    trace.entries.back().step_norm = step_norm;

    if (opts.check_monotone && opts.x0_certified &&
        gap > opts.psd_tol * (1.0 + xnorm + X_next.spectral_norm())) {
      rep.status = SolveStatus::MonotonicityViolated;
      break;
    }

    X = X_next;
  }

  if (opts.record_trace) {
    if ((rep.status == SolveStatus::Converged ||
         rep.status == SolveStatus::MaxIterExceeded) &&
        trace.iterates.size() >= 5) {
      try {
        rep.rate_estimate = rate_estimate(trace, rep.X);
      } catch (const ArgumentError&) {
        // all recorded iterates sit on the limit; no rate to report
      }
    }
    rep.trace = std::move(trace);
  }
  return rep;
}

double rate_estimate(const IterationTrace& trace, const HermitianMatrix& X_star) {
  const auto& its = trace.iterates;
  if (its.size() < 5) {
    throw ArgumentError("rate_estimate: insufficient trace, need at least 5 recorded iterates");
  }
  std::vector<std::pair<int, double>> dist;  // (k, ||X_k - X_star||), k >= 1
  int positive = 0;
  for (std::size_t k = 0; k < its.size(); ++k) {
    const double d = (its[k] - X_star).spectral_norm();
    if (d > 0.0) {
      ++positive;
      if (k >= 1) dist.emplace_back(static_cast<int>(k), d);
    }
  }
  if (positive < 5 || dist.empty()) {
    throw ArgumentError("rate_estimate: insufficient trace, need at least 5 iterates at positive distance");
  }
  const std::size_t start = (2 * dist.size()) / 3;
  double proxy = 0.0;
  for (std::size_t i = start; i < dist.size(); ++i) {
    proxy = std::max(proxy, std::pow(dist[i].second, 1.0 / dist[i].first));
  }
  return proxy;
}

void write_trace_csv(const IterationTrace& trace, std::ostream& out) {
  out << "k,residual,monotone_gap,rho,lambda_min_RX,step_norm\n";
  for (const TraceEntry& e : trace.entries) {
    std::string line = std::to_string(e.k);
    for (double v : {e.residual, e.monotone_gap, e.rho, e.lambda_min_RX, e.step_norm}) {
      line += ',';
      append_csv_value(line, v);
    }
    line += '\n';
    out << line;
  }
}

}  // namespace cdare
