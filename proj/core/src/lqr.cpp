#include "cdare/lqr.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

namespace cdare {

namespace {

constexpr double kDivergenceGuard = 1e150;

void require_regulator_regime(const HermitianMatrix& H, const HermitianMatrix& R,
                              double psd_base) {
  const double h_min = H.lambda_min();
  if (h_min < -psd_base * (1.0 + H.spectral_norm())) {
    std::ostringstream os;
    os << "regulator regime requires H >= 0, lambda_min(H) = " << h_min;
    throw ArgumentError(os.str());
  }
  const double r_min = R.lambda_min();
  if (!(r_min > 0.0)) {
    std::ostringstream os;
    os << "regulator regime requires R > 0, lambda_min(R) = " << r_min;
    throw ArgumentError(os.str());
  }
}

double stage_cost(const ComplexVector& x, const ComplexVector& u,
                  const HermitianMatrix& H, const HermitianMatrix& R) {
  return (x.adjoint() * H.matrix() * x).value().real() +
         (u.adjoint() * R.matrix() * u).value().real();
}

}  // namespace

ComplexMatrix synthesize(const ProblemInstance& P, const HermitianMatrix& X_star) {
  RiccatiEval ev;
  try {
    ev = riccati_eval(P, X_star);
  } catch (const DomainError& e) {
    throw ArgumentError(std::string("synthesize: outside the LQR regime, ") + e.what());
  }
  if (!(ev.rx_lambda_min > 0.0)) {
    std::ostringstream os;
    os << "synthesize: outside the LQR regime, R_{X*} is not positive definite "
          "(lambda_min = "
       << ev.rx_lambda_min << ")";
    throw ArgumentError(os.str());
  }
  return ev.loop.F;
}

Trajectory simulate(const ProblemInstance& P, const ComplexMatrix& F,
                    const ComplexVector& x0, int N, const HermitianMatrix* X_star) {
  if (F.rows() != P.m() || F.cols() != P.n()) {
    std::ostringstream os;
    os << "simulate: F is " << F.rows() << "x" << F.cols() << ", expected " << P.m()
       << "x" << P.n();
    throw DimensionError(os.str());
  }
  if (x0.size() != P.n()) {
    throw DimensionError("simulate: x0 has wrong dimension");
  }
  if (N < 1) throw ArgumentError("simulate: N must be positive");

  Trajectory traj;
  traj.states.reserve(static_cast<std::size_t>(N) + 1);
  traj.inputs.reserve(static_cast<std::size_t>(N));

  ComplexVector x = x0;
  traj.states.push_back(x);
  for (int k = 0; k < N; ++k) {
    const ComplexVector u = -F * x;
    traj.inputs.push_back(u);
    // The antilinear recurrence, evaluated literally.
    x = P.A() * x.conjugate() + P.B() * u.conjugate();
    if (!x.allFinite() || x.norm() > kDivergenceGuard) {
      std::ostringstream os;
      os << "simulate: trajectory diverged at step " << k + 1;
      throw NumericalError(os.str());
    }
    traj.states.push_back(x);
  }
  const double xn2 = traj.states.back().squaredNorm();
  traj.truncation_tail = X_star ? xn2 * X_star->spectral_norm() : xn2;
  return traj;
}

double evaluate_cost(const Trajectory& traj, const HermitianMatrix& H,
                     const HermitianMatrix& R, double psd_base) {
  require_regulator_regime(H, R, psd_base);
  if (traj.states.size() != traj.inputs.size() + 1) {
    throw ArgumentError("evaluate_cost: trajectory has inconsistent lengths");
  }
  double cost = 0.0;
  for (std::size_t k = 0; k < traj.inputs.size(); ++k) {
    cost += stage_cost(traj.states[k], traj.inputs[k], H, R);
  }
  return cost;
}

OptimalityReport verify_optimality(const ProblemInstance& P, const HermitianMatrix& X_star,
                                   const ComplexVector& x0, int N) {
  require_regulator_regime(P.H(), P.R(), P.tols().psd_base);
  const RiccatiEval ev = riccati_eval(P, X_star);
  if (!(ev.rx_lambda_min > 0.0)) {
    throw ArgumentError("verify_optimality: R_{X*} is not positive definite");
  }
  if (!(ev.loop.rho_T_hat < 1.0)) {
    std::ostringstream os;
    os << "verify_optimality: rho(T_hat_{X*}) = " << ev.loop.rho_T_hat
       << " >= 1, truncated cost cannot approximate the infinite sum";
    throw ArgumentError(os.str());
  }

  const ComplexMatrix& F = ev.loop.F;
  const Trajectory traj = simulate(P, F, x0, N, &X_star);

  OptimalityReport rep;
  rep.cost = evaluate_cost(traj, P.H(), P.R(), P.tols().psd_base);
  rep.predicted = (x0.adjoint() * X_star.matrix() * x0).value().real();
  rep.gap = std::abs(rep.cost - rep.predicted);
  rep.tail_estimate = traj.truncation_tail;

  // Static-gain perturbations must not beat the synthesized gain.
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double fscale = 1.0 + F.norm();
  const double slack = P.tols().psd_base * (1.0 + std::abs(rep.predicted));
  rep.suboptimality_ok = true;
  rep.worst_suboptimality = 0.0;
  for (double eps : {1e-3, 1e-2, 1e-1}) {
    for (int rep_i = 0; rep_i < 2; ++rep_i) {
      ComplexMatrix delta(P.m(), P.n());
      for (Eigen::Index i = 0; i < P.m(); ++i) {
        for (Eigen::Index j = 0; j < P.n(); ++j) {
          delta(i, j) = Complex(normal(rng), normal(rng));
        }
      }
      delta *= eps * fscale / std::max(delta.norm(), 1e-300);
      double perturbed = std::numeric_limits<double>::infinity();
      try {
        perturbed = evaluate_cost(simulate(P, F + delta, x0, N, &X_star), P.H(),
                                  P.R(), P.tols().psd_base);
      } catch (const NumericalError&) {
        // divergent rollout; infinitely worse than optimal
      }
      ++rep.perturbations;
      if (perturbed < rep.predicted - slack) {
        rep.suboptimality_ok = false;
        rep.worst_suboptimality =
            std::max(rep.worst_suboptimality, rep.predicted - perturbed);
      }
    }
  }
  return rep;
}

void write_trajectory_csv(const Trajectory& traj, const HermitianMatrix& H,
                          const HermitianMatrix& R, std::ostream& out) {
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().size();
  const Eigen::Index m = traj.inputs.empty() ? 0 : traj.inputs.front().size();

  out << "k";
  for (Eigen::Index i = 0; i < n; ++i) out << ",x" << i << "_re,x" << i << "_im";
  for (Eigen::Index i = 0; i < m; ++i) out << ",u" << i << "_re,u" << i << "_im";
  out << ",running_cost\n";

  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << ',' << buf;
  };

  double running = 0.0;
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    if (k < traj.inputs.size()) {
      running += stage_cost(traj.states[k], traj.inputs[k], H, R);
    }
    out << k;
    for (Eigen::Index i = 0; i < n; ++i) {
      put(traj.states[k](i).real());
      put(traj.states[k](i).imag());
    }
    for (Eigen::Index i = 0; i < m; ++i) {
      if (k < traj.inputs.size()) {
        put(traj.inputs[k](i).real());
        put(traj.inputs[k](i).imag());
      } else {
        put(std::numeric_limits<double>::quiet_NaN());
        put(std::numeric_limits<double>::quiet_NaN());
      }
    }
    put(running);
    out << '\n';
  }
}

}  // namespace cdare
