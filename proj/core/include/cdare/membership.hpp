#pragma once

#include <optional>
#include <vector>

#include "cdare/problem.hpp"

namespace cdare {

/// One set-membership verdict plus the margin that decided it.
struct SetMembership {
  bool member = false;
  double margin = 0.0;
};

/// Witness-relative S_>= certificate: X belongs when
/// C_{T_W}(X) - H_W >= 0 for the supplied stability witness W.
struct SGeqResult {
  bool member = false;
  bool witness_valid = false;  ///< rho(T_hat_W) < 1 held for the witness
  double witness_rho = 0.0;
  double margin = 0.0;         ///< lambda_min(C_{T_W}(X) - H_W)
};

/// Certificates and margins for X against the sets P (R_X > 0),
/// T (rho(T_hat_X) < 1), R_<= (X <= R(X)), R_>= (X >= R(X)) and,
/// when a witness is supplied, S_>=.
struct MembershipReport {
  SetMembership in_P;       ///< margin: lambda_min(R_X)
  SetMembership in_T;       ///< margin: 1 - rho(T_hat_X)
  double rho_T_hat = 0.0;
  SetMembership in_R_leq;   ///< margin: lambda_min(R(X) - X)
  SetMembership in_R_geq;   ///< margin: lambda_min(X - R(X))
  std::optional<SGeqResult> in_S_geq;
  double psd_tol_used = 0.0;
};

/// Fills every field of the report. S_>= is checked only against the given
/// witness; membership in the full union over all stability witnesses is not
/// decidable and is not attempted. Throws DomainError when R_X is singular.
MembershipReport classify(const ProblemInstance& P, const HermitianMatrix& X,
                          const std::optional<HermitianMatrix>& witness = std::nullopt);

struct CertificateResult {
  bool certified = false;
  double margin = 0.0;        ///< lambda_min(C_{T_X}(Y) - K(X_T, X))
  double rho_measured = 0.0;  ///< rho(T_hat_X), recomputed numerically
  bool rho_consistent = true; ///< no contradiction between certificate and rho
};

/// Sufficient stability condition: with X_T a stability witness, X in P and
/// Y >= 0, the inequality C_{T_X}(Y) >= K(X_T, X) certifies rho(T_hat_X) < 1.
/// The measured spectral radius is attached; a certified result paired with
/// rho >= 1 is flagged as a numerical inconsistency rather than trusted.
/// Throws ArgumentError naming the violated hypothesis.
CertificateResult stability_certificate(const ProblemInstance& P, const HermitianMatrix& X,
                                        const HermitianMatrix& X_T, const HermitianMatrix& Y);

/// Standing-assumption report: a validated stability witness and a validated
/// member of R_<= and P.
struct AssumptionReport {
  std::optional<HermitianMatrix> T_nonempty_witness;
  std::optional<HermitianMatrix> RleqP_nonempty_witness;
  double rho_T_witness = 0.0;
  double margin_R_leq = 0.0;
  double margin_P = 0.0;
  bool satisfied = false;
};

/// Validates rho(T_hat_{X_T}) < 1 and X_P in R_<= with R_{X_P} > 0.
/// Failures are reported, never thrown.
AssumptionReport check_assumptions(const ProblemInstance& P, const HermitianMatrix& X_T,
                                   const HermitianMatrix& X_P);

/// Heuristic stability-witness search over tau * I for tau in +-powers of
/// ten (plus any extra candidates). Returns the first candidate with
/// rho(T_hat) < 1, or nullopt. This is a labeled heuristic: nothing about
/// the problem guarantees the scan finds a witness when one exists.
std::optional<HermitianMatrix> heuristic_T_witness(
    const ProblemInstance& P, const std::vector<HermitianMatrix>& extra_candidates = {});

}  // namespace cdare
