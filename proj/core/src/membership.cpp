#include "cdare/membership.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cdare/stein.hpp"

namespace cdare {

MembershipReport classify(const ProblemInstance& P, const HermitianMatrix& X,
                          const std::optional<HermitianMatrix>& witness) {
  const RiccatiEval ev = riccati_eval(P, X);
  const double psd_tol = psd_threshold(P.tols().psd_base, X, ev.image);

  MembershipReport rep;
  rep.psd_tol_used = psd_tol;

  rep.in_P.margin = ev.rx_lambda_min;
  rep.in_P.member = ev.rx_lambda_min > 0.0;

  rep.rho_T_hat = ev.loop.rho_T_hat;
  rep.in_T.margin = 1.0 - ev.loop.rho_T_hat;
  rep.in_T.member = ev.loop.rho_T_hat < 1.0;

  const HermitianMatrix diff = ev.image - X;  // R(X) - X
  rep.in_R_leq.margin = diff.lambda_min();
  rep.in_R_leq.member = rep.in_R_leq.margin >= -psd_tol;
  rep.in_R_geq.margin = (-diff).lambda_min();
  rep.in_R_geq.member = rep.in_R_geq.margin >= -psd_tol;

  if (witness) {
    SGeqResult sg;
    const RiccatiEval evW = riccati_eval(P, *witness);
    sg.witness_rho = evW.loop.rho_T_hat;
    sg.witness_valid = evW.loop.rho_T_hat < 1.0;
    if (sg.witness_valid) {
      const HermitianMatrix HW(P.H().matrix() +
                               evW.loop.F.adjoint() * P.R().matrix() * evW.loop.F);
      const HermitianMatrix lhs = stein_apply(evW.loop.T, X);
      sg.margin = (lhs - HW).lambda_min();
      sg.member = sg.margin >= -psd_threshold(P.tols().psd_base, lhs, HW);
    } else {
      sg.margin = std::numeric_limits<double>::quiet_NaN();
      sg.member = false;
    }
    rep.in_S_geq = sg;
  }
  return rep;
}

CertificateResult stability_certificate(const ProblemInstance& P, const HermitianMatrix& X,
                                        const HermitianMatrix& X_T, const HermitianMatrix& Y) {
  const RiccatiEval evX = riccati_eval(P, X);
  if (evX.rx_lambda_min <= 0.0) {
    std::ostringstream os;
    os << "stability_certificate: hypothesis X in P fails, lambda_min(R_X) = "
       << evX.rx_lambda_min;
    throw ArgumentError(os.str());
  }
  const double y_tol = P.tols().psd_base * (1.0 + Y.spectral_norm());
  if (Y.lambda_min() < -y_tol) {
    std::ostringstream os;
    os << "stability_certificate: hypothesis Y >= 0 fails, lambda_min(Y) = "
       << Y.lambda_min();
    throw ArgumentError(os.str());
  }
  const RiccatiEval evW = riccati_eval(P, X_T);
  if (!(evW.loop.rho_T_hat < 1.0)) {
    std::ostringstream os;
    os << "stability_certificate: hypothesis rho(T_hat_{X_T}) < 1 fails, rho = "
       << evW.loop.rho_T_hat;
    throw ArgumentError(os.str());
  }

  const ComplexMatrix DF = evW.loop.F - evX.loop.F;
  const HermitianMatrix K(DF.adjoint() * evX.loop.R_X.matrix() * DF);
  const HermitianMatrix lhs = stein_apply(evX.loop.T, Y);

  CertificateResult res;
  res.margin = (lhs - K).lambda_min();
  res.certified = res.margin >= -psd_threshold(P.tols().psd_base, lhs, K);
  res.rho_measured = evX.loop.rho_T_hat;
  res.rho_consistent = !res.certified || res.rho_measured < 1.0 + P.tols().rho_slack;
  return res;
}

AssumptionReport check_assumptions(const ProblemInstance& P, const HermitianMatrix& X_T,
                                   const HermitianMatrix& X_P) {
  AssumptionReport rep;
  rep.rho_T_witness = std::numeric_limits<double>::quiet_NaN();
  rep.margin_R_leq = std::numeric_limits<double>::quiet_NaN();
  rep.margin_P = std::numeric_limits<double>::quiet_NaN();

  try {
    const RiccatiEval ev = riccati_eval(P, X_T);
    rep.rho_T_witness = ev.loop.rho_T_hat;
    if (ev.loop.rho_T_hat < 1.0) rep.T_nonempty_witness = X_T;
  } catch (const DomainError&) {
    // witness outside dom(R); leave it unvalidated
  }

  try {
    const MembershipReport mr = classify(P, X_P);
    rep.margin_R_leq = mr.in_R_leq.margin;
    rep.margin_P = mr.in_P.margin;
    if (mr.in_R_leq.member && mr.in_P.member) rep.RleqP_nonempty_witness = X_P;
  } catch (const DomainError&) {
  }

  rep.satisfied = rep.T_nonempty_witness.has_value() &&
                  rep.RleqP_nonempty_witness.has_value();
  return rep;
}

std::optional<HermitianMatrix> heuristic_T_witness(
    const ProblemInstance& P, const std::vector<HermitianMatrix>& extra_candidates) {
  std::vector<HermitianMatrix> candidates = extra_candidates;
  candidates.push_back(HermitianMatrix::zero(P.n()));
  for (int j = -2; j <= 3; ++j) {
    const double tau = std::pow(10.0, j);
    candidates.push_back(HermitianMatrix::scaled_identity(P.n(), tau));
    candidates.push_back(HermitianMatrix::scaled_identity(P.n(), -tau));
  }
  for (const HermitianMatrix& cand : candidates) {
    if (cand.dim() != P.n()) continue;
    try {
      if (riccati_eval(P, cand).loop.rho_T_hat < 1.0) return cand;
    } catch (const DomainError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace cdare
