// Command line front end: solve / check / scalar / simulate on instance
// files documented in the repository README.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdare/fpi.hpp"
#include "cdare/instance_io.hpp"
#include "cdare/lqr.hpp"
#include "cdare/membership.hpp"
#include "cdare/scalar.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNotConverged = 1;
constexpr int kExitInputError = 2;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cdare::ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json matrix_pairs(const cdare::ComplexMatrix& M) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      arr.push_back({M(i, j).real(), M(i, j).imag()});
    }
  }
  return arr;
}

void print_matrix(std::ostream& out, const cdare::ComplexMatrix& M,
                  const std::string& indent) {
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    out << indent << "[";
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      const auto z = M(i, j);
      out << fmt(z.real());
      if (z.imag() != 0.0) out << (z.imag() < 0 ? "" : "+") << fmt(z.imag()) << "i";
      if (j + 1 < M.cols()) out << ", ";
    }
    out << "]\n";
  }
}

// Matrix argument: "zero", "identity", a real number tau (tau * I), or
// "@file" holding n*n [re, im] pairs.
cdare::HermitianMatrix parse_matrix_spec(const std::string& spec, Eigen::Index n,
                                         const std::string& label) {
  if (spec == "zero") return cdare::HermitianMatrix::zero(n);
  if (spec == "identity") return cdare::HermitianMatrix::identity(n);
  if (!spec.empty() && spec[0] == '@') {
    return cdare::parse_hermitian_payload(read_file(spec.substr(1)), n, label);
  }
  char* end = nullptr;
  const double tau = std::strtod(spec.c_str(), &end);
  if (end == spec.c_str() || *end != '\0') {
    throw cdare::ParseError(label + ": expected zero|identity|<tau>|@file, got \"" +
                            spec + "\"");
  }
  return cdare::HermitianMatrix::scaled_identity(n, tau);
}

// State argument: "ones", "e0", a real number tau (tau * ones), or "@file"
// holding n [re, im] pairs.
cdare::ComplexVector parse_state_spec(const std::string& spec, Eigen::Index n,
                                      const std::string& label) {
  if (spec == "ones") return cdare::ComplexVector::Ones(n);
  if (spec == "e0") {
    cdare::ComplexVector v = cdare::ComplexVector::Zero(n);
    v(0) = 1.0;
    return v;
  }
  if (!spec.empty() && spec[0] == '@') {
    json j;
    try {
      j = json::parse(read_file(spec.substr(1)));
    } catch (const json::parse_error& e) {
      throw cdare::ParseError(label + ": invalid JSON: " + e.what());
    }
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
      throw cdare::ParseError(label + ": expected an array of n [re, im] pairs");
    }
    cdare::ComplexVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const json& e = j[static_cast<std::size_t>(i)];
      if (!e.is_array() || e.size() != 2) {
        throw cdare::ParseError(label + ": entry is not a [re, im] pair");
      }
      v(i) = cdare::Complex(e[0].get<double>(), e[1].get<double>());
    }
    return v;
  }
  char* end = nullptr;
  const double tau = std::strtod(spec.c_str(), &end);
  if (end == spec.c_str() || *end != '\0') {
    throw cdare::ParseError(label + ": expected ones|e0|<tau>|@file, got \"" + spec +
                            "\"");
  }
  return tau * cdare::ComplexVector::Ones(n);
}

std::complex<double> parse_complex_arg(const std::string& s, const std::string& label) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw cdare::ParseError(label + ": expected re or re,im, got \"" + s + "\"");
  }
}

void apply_env_overrides(cdare::SolverOptions& opts) {
  auto read_env = [](const char* name, double& target) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      const double parsed = std::strtod(v, &end);
      if (end == v || *end != '\0') {
        throw cdare::ParseError(std::string(name) + ": cannot parse \"" + v + "\"");
      }
      target = parsed;
    }
  };
  read_env("CDARE_TOL_RESIDUAL", opts.tol_residual);
  read_env("CDARE_PSD_TOL", opts.psd_tol);
  if (const char* v = std::getenv("CDARE_MAX_ITER")) {
    opts.max_iter = std::atoi(v);
    if (opts.max_iter < 1) {
      throw cdare::ParseError("CDARE_MAX_ITER: must be at least 1");
    }
  }
}

struct SolveConfig {
  std::string instance_path;
  std::string x0_spec;
  std::string witness_spec;
  bool heuristic_witness = false;
  double tol = -1.0;      // <0: keep default
  int max_iter = -1;      // <0: keep default
  std::string trace_path;
  bool json_out = false;
};

struct SolveOutcome {
  cdare::SolutionReport report;
  cdare::ParsedInstance parsed;
  std::string x0_source;
};

SolveOutcome run_solve_pipeline(const SolveConfig& cfg) {
  cdare::ParsedInstance parsed = cdare::parse_instance(cfg.instance_path);
  const Eigen::Index n = parsed.problem.n();

  cdare::SolverOptions opts;
  apply_env_overrides(opts);
  // File options override env-adjusted defaults; flags override both.
  {
    cdare::SolverOptions defaults;
    cdare::SolverOptions file = parsed.options;
    if (file.tol_residual != defaults.tol_residual) opts.tol_residual = file.tol_residual;
    if (file.max_iter != defaults.max_iter) opts.max_iter = file.max_iter;
    if (file.psd_tol != defaults.psd_tol) opts.psd_tol = file.psd_tol;
    opts.check_monotone = file.check_monotone;
    opts.check_stability = file.check_stability;
    opts.record_trace = file.record_trace;
  }
  if (cfg.tol > 0.0) opts.tol_residual = cfg.tol;
  if (cfg.max_iter > 0) opts.max_iter = cfg.max_iter;
  if (!cfg.trace_path.empty()) opts.record_trace = true;

  std::optional<cdare::HermitianMatrix> X0;
  std::string source;

  if (!cfg.x0_spec.empty()) {
    X0 = parse_matrix_spec(cfg.x0_spec, n, "--x0");
    source = "explicit X0";
    if (!cfg.witness_spec.empty()) {
      const auto W = parse_matrix_spec(cfg.witness_spec, n, "--witness");
      const auto rep = cdare::classify(parsed.problem, *X0, W);
      opts.x0_certified = rep.in_S_geq && rep.in_S_geq->member;
      source += opts.x0_certified ? " (certified in S_>= by witness)"
                                  : " (witness did not certify S_>=)";
    }
  } else {
    std::optional<cdare::HermitianMatrix> W;
    if (!cfg.witness_spec.empty()) {
      W = parse_matrix_spec(cfg.witness_spec, n, "--witness");
      source = "initial_matrix from --witness";
    } else if (parsed.x_T_witness) {
      W = parsed.x_T_witness;
      source = "initial_matrix from instance x_T_witness";
    } else if (cfg.heuristic_witness) {
      W = cdare::heuristic_T_witness(parsed.problem);
      if (!W) {
        throw cdare::ArgumentError(
            "heuristic witness search found no tau*I with rho(T_hat) < 1");
      }
      source = "initial_matrix from heuristic witness search (heuristic, unverified choice of tau)";
    } else {
      throw cdare::ParseError(
          "solve requires --x0, --witness, an x_T_witness in the instance, or "
          "--heuristic-witness");
    }
    X0 = cdare::initial_matrix(parsed.problem, *W);
    opts.x0_certified = true;
  }

  SolveOutcome out{cdare::fpi_solve(parsed.problem, *X0, opts), std::move(parsed),
                   std::move(source)};
  if (!cfg.trace_path.empty() && out.report.trace) {
    std::ofstream tf(cfg.trace_path);
    if (!tf) throw cdare::ParseError(cfg.trace_path + ": cannot open for writing");
    cdare::write_trace_csv(*out.report.trace, tf);
  }
  return out;
}

json report_to_json(const cdare::SolutionReport& rep) {
  json j;
  j["status"] = cdare::status_name(rep.status);
  j["iterations"] = rep.iterations;
  j["residual"] = rep.residual;
  j["rho_final"] = rep.rho_final;
  j["s_geq_regime"] = rep.s_geq_regime;
  if (rep.rate_estimate) j["rate_estimate"] = *rep.rate_estimate;
  if (rep.domain_exit_step) j["domain_exit_step"] = *rep.domain_exit_step;
  j["X"] = matrix_pairs(rep.X.matrix());
  return j;
}

void print_solution_report(const SolveOutcome& out) {
  const auto& rep = out.report;
  std::cout << "status:        " << cdare::status_name(rep.status) << "\n"
            << "x0 source:     " << out.x0_source << "\n"
            << "regime:        " << (rep.s_geq_regime ? "certified S_>= start" : "uncertified start")
            << "\n"
            << "iterations:    " << rep.iterations << "\n"
            << "residual:      " << fmt(rep.residual) << "\n"
            << "rho(T_hat_X):  " << fmt(rep.rho_final) << "\n";
  if (rep.rate_estimate) {
    std::cout << "rate estimate: " << fmt(*rep.rate_estimate) << "\n";
  }
  if (rep.domain_exit_step) {
    std::cout << "domain exit:   step " << *rep.domain_exit_step << "\n";
  }
  std::cout << "X:\n";
  print_matrix(std::cout, rep.X.matrix(), "  ");
}

int cmd_solve(const SolveConfig& cfg) {
  SolveOutcome out = run_solve_pipeline(cfg);
  if (cfg.json_out) {
    json j = report_to_json(out.report);
    j["x0_source"] = out.x0_source;
    std::cout << j.dump(2) << "\n";
  } else {
    print_solution_report(out);
  }
  return out.report.status == cdare::SolveStatus::Converged ? kExitOk
                                                            : kExitNotConverged;
}

json membership_to_json(const cdare::MembershipReport& rep) {
  json j;
  j["in_P"] = {{"member", rep.in_P.member}, {"margin", rep.in_P.margin}};
  j["in_T"] = {{"member", rep.in_T.member}, {"rho_T_hat", rep.rho_T_hat}};
  j["in_R_leq"] = {{"member", rep.in_R_leq.member}, {"margin", rep.in_R_leq.margin}};
  j["in_R_geq"] = {{"member", rep.in_R_geq.member}, {"margin", rep.in_R_geq.margin}};
  if (rep.in_S_geq) {
    j["in_S_geq"] = {{"member", rep.in_S_geq->member},
                     {"witness_valid", rep.in_S_geq->witness_valid},
                     {"witness_rho", rep.in_S_geq->witness_rho},
                     {"margin", rep.in_S_geq->margin}};
  }
  j["psd_tol_used"] = rep.psd_tol_used;
  return j;
}

int cmd_check(const std::string& instance_path, const std::string& x_spec,
              const std::string& witness_spec, const std::string& xt_spec,
              const std::string& xp_spec, bool json_out) {
  const cdare::ParsedInstance parsed = cdare::parse_instance(instance_path);
  const Eigen::Index n = parsed.problem.n();
  const cdare::HermitianMatrix X = parse_matrix_spec(x_spec, n, "--X");

  std::optional<cdare::HermitianMatrix> W;
  if (!witness_spec.empty()) W = parse_matrix_spec(witness_spec, n, "--witness");
  else if (parsed.x_T_witness) W = parsed.x_T_witness;

  const cdare::MembershipReport rep = cdare::classify(parsed.problem, X, W);

  std::optional<cdare::AssumptionReport> assumptions;
  if (!xt_spec.empty() || !xp_spec.empty()) {
    if (xt_spec.empty() || xp_spec.empty()) {
      throw cdare::ParseError("assumption check needs both --XT and --XP");
    }
    assumptions = cdare::check_assumptions(parsed.problem,
                                           parse_matrix_spec(xt_spec, n, "--XT"),
                                           parse_matrix_spec(xp_spec, n, "--XP"));
  }

  if (json_out) {
    json j;
    j["membership"] = membership_to_json(rep);
    if (assumptions) {
      j["assumptions"] = {{"satisfied", assumptions->satisfied},
                          {"rho_T_witness", assumptions->rho_T_witness},
                          {"margin_R_leq", assumptions->margin_R_leq},
                          {"margin_P", assumptions->margin_P},
                          {"T_witness_valid", assumptions->T_nonempty_witness.has_value()},
                          {"RleqP_witness_valid",
                           assumptions->RleqP_nonempty_witness.has_value()}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    auto line = [](const char* name, const cdare::SetMembership& sm) {
      std::cout << name << (sm.member ? "yes" : "no") << "  (margin " << fmt(sm.margin)
                << ")\n";
    };
    line("in_P:      ", rep.in_P);
    std::cout << "in_T:      " << (rep.in_T.member ? "yes" : "no") << "  (rho(T_hat) "
              << fmt(rep.rho_T_hat) << ")\n";
    line("in_R_leq:  ", rep.in_R_leq);
    line("in_R_geq:  ", rep.in_R_geq);
    if (rep.in_S_geq) {
      std::cout << "in_S_geq:  " << (rep.in_S_geq->member ? "yes" : "no");
      if (!rep.in_S_geq->witness_valid) {
        std::cout << "  (witness invalid: rho(T_hat_W) = " << fmt(rep.in_S_geq->witness_rho)
                  << ")";
      } else {
        std::cout << "  (margin " << fmt(rep.in_S_geq->margin) << ", witness rho "
                  << fmt(rep.in_S_geq->witness_rho) << ")";
      }
      std::cout << "\n";
    }
    std::cout << "psd tol:   " << fmt(rep.psd_tol_used) << "\n";
    if (assumptions) {
      std::cout << "assumptions satisfied: " << (assumptions->satisfied ? "yes" : "no")
                << "\n"
                << "  rho(T_hat_{X_T}): " << fmt(assumptions->rho_T_witness) << "\n"
                << "  X_P margin R_leq: " << fmt(assumptions->margin_R_leq) << "\n"
                << "  X_P margin P:     " << fmt(assumptions->margin_P) << "\n";
    }
  }
  return kExitOk;
}

int cmd_scalar(const std::string& a_s, const std::string& b_s, double r, double h,
               std::optional<double> x0, long iters, bool json_out) {
  const cdare::ScalarProblem sp(parse_complex_arg(a_s, "--a"),
                                parse_complex_arg(b_s, "--b"), r, h);
  const cdare::ScalarAnalysis an = cdare::analyze(sp);

  json j;
  j["g"] = sp.g;
  j["D"] = an.D;
  j["h_M"] = an.h_M;
  j["h_m"] = an.h_m;
  j["case"] = cdare::case_name(an.case_label);
  j["T_set"] = {{"left_upper", an.t_left}, {"right_lower", an.t_right}};
  if (an.x_M) j["x_M"] = *an.x_M;
  if (an.x_m) j["x_m"] = *an.x_m;
  if (an.t_hat_M) j["t_hat_M"] = *an.t_hat_M;
  if (an.t_hat_m) j["t_hat_m"] = *an.t_hat_m;

  json table = json::array();
  std::string table_note;
  if (x0) {
    try {
      double x_fpi = *x0;
      for (long k = 0; k <= iters; ++k) {
        const double x_cf = cdare::closed_form_iterate(sp, *x0, k);
        table.push_back({{"k", k},
                         {"closed_form", x_cf},
                         {"fpi", x_fpi},
                         {"diff", std::abs(x_cf - x_fpi)}});
        if (k < iters) x_fpi = cdare::scalar_step(sp, x_fpi);
      }
    } catch (const cdare::Error& e) {
      table_note = e.what();
    }
  }

  if (json_out) {
    if (x0) {
      if (table_note.empty()) j["iterates"] = table;
      else j["iterates_unavailable"] = table_note;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "g:        " << fmt(sp.g) << "\n"
              << "D:        " << fmt(an.D) << "\n"
              << "h_M:      " << fmt(an.h_M) << "\n"
              << "h_m:      " << fmt(an.h_m) << "\n"
              << "case:     " << cdare::case_name(an.case_label) << "\n"
              << "T set:    (-inf, " << fmt(an.t_left) << ") U (" << fmt(an.t_right)
              << ", inf)\n";
    if (an.x_M) std::cout << "x_M:      " << fmt(*an.x_M) << "\n";
    if (an.x_m) std::cout << "x_m:      " << fmt(*an.x_m) << "\n";
    if (an.t_hat_M) std::cout << "t_hat_M:  " << fmt(*an.t_hat_M) << "\n";
    if (an.t_hat_m) std::cout << "t_hat_m:  " << fmt(*an.t_hat_m) << "\n";
    if (x0) {
      if (!table_note.empty()) {
        std::cout << "iterates unavailable: " << table_note << "\n";
      } else {
        std::cout << "k, closed_form, fpi, |diff|\n";
        for (const auto& row : table) {
          std::cout << row["k"].get<long>() << ", " << fmt(row["closed_form"].get<double>())
                    << ", " << fmt(row["fpi"].get<double>()) << ", "
                    << fmt(row["diff"].get<double>()) << "\n";
        }
      }
    }
  }
  return kExitOk;
}

int cmd_simulate(const SolveConfig& cfg, const std::string& solution_spec,
                 const std::string& x0state_spec, int horizon,
                 const std::string& out_path) {
  cdare::ParsedInstance parsed = cdare::parse_instance(cfg.instance_path);
  const Eigen::Index n = parsed.problem.n();

  cdare::HermitianMatrix X_star = cdare::HermitianMatrix::zero(n);
  std::string solution_source;
  bool solve_converged = true;
  if (!solution_spec.empty()) {
    X_star = parse_matrix_spec(solution_spec, n, "--solution");
    solution_source = "explicit --solution";
  } else {
    SolveOutcome out = run_solve_pipeline(cfg);
    solve_converged = out.report.status == cdare::SolveStatus::Converged;
    X_star = out.report.X;
    solution_source = "fpi solve (" + std::string(cdare::status_name(out.report.status)) +
                      ", " + out.x0_source + ")";
  }

  cdare::ComplexVector x0;
  if (!x0state_spec.empty()) {
    x0 = parse_state_spec(x0state_spec, n, "--x0state");
  } else if (parsed.x0_state) {
    x0 = *parsed.x0_state;
  } else {
    throw cdare::ParseError("simulate requires --x0state or x0_state in the instance");
  }

  const cdare::OptimalityReport opt =
      cdare::verify_optimality(parsed.problem, X_star, x0, horizon);

  if (!out_path.empty()) {
    const cdare::ComplexMatrix F = cdare::synthesize(parsed.problem, X_star);
    const cdare::Trajectory traj =
        cdare::simulate(parsed.problem, F, x0, horizon, &X_star);
    std::ofstream tf(out_path);
    if (!tf) throw cdare::ParseError(out_path + ": cannot open for writing");
    cdare::write_trajectory_csv(traj, parsed.problem.H(), parsed.problem.R(), tf);
  }

  if (cfg.json_out) {
    json j;
    j["solution_source"] = solution_source;
    j["horizon"] = horizon;
    j["cost"] = opt.cost;
    j["predicted"] = opt.predicted;
    j["optimality_gap"] = opt.gap;
    j["tail_estimate"] = opt.tail_estimate;
    j["suboptimality_ok"] = opt.suboptimality_ok;
    j["perturbations"] = opt.perturbations;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "solution:        " << solution_source << "\n"
              << "horizon:         " << horizon << "\n"
              << "truncated cost:  " << fmt(opt.cost) << "\n"
              << "x0^H X* x0:      " << fmt(opt.predicted) << "\n"
              << "optimality gap:  " << fmt(opt.gap) << "\n"
              << "tail estimate:   " << fmt(opt.tail_estimate) << "\n"
              << "suboptimality:   "
              << (opt.suboptimality_ok ? "no perturbed gain beat the synthesized gain"
                                       : "a perturbed gain beat the synthesized gain")
              << " (" << opt.perturbations << " samples)\n";
  }
  return solve_converged ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugate discrete-time algebraic Riccati equation solver"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Run the fixed-point iteration on an instance");
  SolveConfig scfg;
  solve->add_option("--instance", scfg.instance_path, "Instance JSON file")->required();
  solve->add_option("--x0", scfg.x0_spec, "Initial matrix: zero|identity|<tau>|@file");
  solve->add_option("--witness", scfg.witness_spec,
                    "Stability witness X_T used to build X0: zero|identity|<tau>|@file");
  solve->add_flag("--heuristic-witness", scfg.heuristic_witness,
                  "Scan tau*I candidates for a stability witness (heuristic)");
  solve->add_option("--tol", scfg.tol, "Relative residual tolerance");
  solve->add_option("--max-iter", scfg.max_iter, "Iteration cap");
  solve->add_option("--trace", scfg.trace_path, "Write the iteration trace CSV here");
  solve->add_flag("--json", scfg.json_out, "Machine-readable output");

  // check
  auto* check = app.add_subcommand("check", "Classify a matrix against the solution sets");
  std::string chk_instance, chk_x = "zero", chk_witness, chk_xt, chk_xp;
  bool chk_json = false;
  check->add_option("--instance", chk_instance, "Instance JSON file")->required();
  check->add_option("--X", chk_x, "Matrix to classify: zero|identity|<tau>|@file")->required();
  check->add_option("--witness", chk_witness, "Witness for the S_>= check");
  check->add_option("--XT", chk_xt, "Stability witness for the assumption check");
  check->add_option("--XP", chk_xp, "R_<= n P witness for the assumption check");
  check->add_flag("--json", chk_json, "Machine-readable output");

  // scalar
  auto* scalar = app.add_subcommand("scalar", "Closed-form analysis of a scalar instance");
  scalar->set_help_flag("--help", "Print help");  // frees -h for the --h option
  std::string sa = "1", sb = "1";
  double sr = 1.0, sh = 0.0;
  double sx0 = 0.0;
  bool sx0_set = false, scalar_json = false;
  long siters = 10;
  scalar->add_option("--a", sa, "Scalar a (re or re,im)")->required();
  scalar->add_option("--b", sb, "Scalar b (re or re,im)")->required();
  scalar->add_option("--r", sr, "Control weight r > 0")->required();
  scalar->add_option("--h", sh, "Constant term h")->required();
  scalar->add_option("--x0", sx0, "Start of the iterate table")->each([&](const std::string&) {
    sx0_set = true;
  });
  scalar->add_option("--iters", siters, "Iterate table length");
  scalar->add_flag("--json", scalar_json, "Machine-readable output");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Closed-loop rollout and cost check");
  SolveConfig simcfg;
  std::string sim_solution, sim_x0state, sim_out;
  int sim_horizon = 300;
  simulate->add_option("--instance", simcfg.instance_path, "Instance JSON file")->required();
  simulate->add_option("--solution", sim_solution,
                       "Use this X* instead of solving: zero|identity|<tau>|@file");
  simulate->add_option("--x0", simcfg.x0_spec, "Solver initial matrix (when solving)");
  simulate->add_option("--witness", simcfg.witness_spec, "Solver witness (when solving)");
  simulate->add_flag("--heuristic-witness", simcfg.heuristic_witness,
                     "Heuristic witness scan (when solving)");
  simulate->add_option("--x0state", sim_x0state, "Initial state: ones|e0|<tau>|@file");
  simulate->add_option("--horizon", sim_horizon, "Rollout length N");
  simulate->add_option("--out", sim_out, "Write the trajectory CSV here");
  simulate->add_flag("--json", simcfg.json_out, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(scfg);
    if (check->parsed()) {
      return cmd_check(chk_instance, chk_x, chk_witness, chk_xt, chk_xp, chk_json);
    }
    if (scalar->parsed()) {
      return cmd_scalar(sa, sb, sr, sh,
                        sx0_set ? std::optional<double>(sx0) : std::nullopt, siters,
                        scalar_json);
    }
    if (simulate->parsed()) {
      return cmd_simulate(simcfg, sim_solution, sim_x0state, sim_horizon, sim_out);
    }
  } catch (const cdare::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cdare::ArgumentError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cdare::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cdare::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotConverged;
  }
  return kExitInputError;
}
