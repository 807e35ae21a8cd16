#include "cdare/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cdare {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
  throw ParseError(origin + ": " + msg);
}

Eigen::Index get_positive_index(const json& j, const char* field,
                                const std::string& origin) {
  if (!j.contains(field)) fail(origin, std::string("missing field \"") + field + "\"");
  if (!j[field].is_number_integer()) {
    fail(origin, std::string("field \"") + field + "\" must be an integer");
  }
  const auto v = j[field].get<long long>();
  if (v < 1) fail(origin, std::string("field \"") + field + "\" must be at least 1");
  return static_cast<Eigen::Index>(v);
}

ComplexMatrix matrix_from_pairs(const json& arr, Eigen::Index rows, Eigen::Index cols,
                                const std::string& label, const std::string& origin) {
  if (!arr.is_array()) fail(origin, label + " must be an array of [re, im] pairs");
  if (static_cast<Eigen::Index>(arr.size()) != rows * cols) {
    std::ostringstream os;
    os << label << " has " << arr.size() << " entries, expected " << rows * cols
       << " (" << rows << "x" << cols << ", row-major)";
    fail(origin, os.str());
  }
  ComplexMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const json& e = arr[static_cast<std::size_t>(i * cols + j)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        std::ostringstream os;
        os << label << "[" << i * cols + j << "] is not a [re, im] pair";
        fail(origin, os.str());
      }
      M(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return M;
}

json matrix_to_pairs(const ComplexMatrix& M) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      arr.push_back({M(i, j).real(), M(i, j).imag()});
    }
  }
  return arr;
}

HermitianMatrix hermitian_field(const json& arr, Eigen::Index n, const std::string& label,
                                const std::string& origin, double tol) {
  const ComplexMatrix M = matrix_from_pairs(arr, n, n, label, origin);
  try {
    return HermitianMatrix::require_hermitian(M, tol, label);
  } catch (const ArgumentError& e) {
    fail(origin, e.what());
  }
}

SolverOptions options_from_json(const json& j, const std::string& origin) {
  SolverOptions opts;
  if (!j.is_object()) fail(origin, "options must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tol_residual") opts.tol_residual = value.get<double>();
    else if (key == "max_iter") opts.max_iter = value.get<int>();
    else if (key == "psd_tol") opts.psd_tol = value.get<double>();
    else if (key == "check_monotone") opts.check_monotone = value.get<bool>();
    else if (key == "check_stability") opts.check_stability = value.get<bool>();
    else if (key == "record_trace") opts.record_trace = value.get<bool>();
    else fail(origin, "unknown options field \"" + key + "\"");
  }
  if (!(opts.tol_residual > 0.0)) fail(origin, "options.tol_residual must be positive");
  if (opts.max_iter < 1) fail(origin, "options.max_iter must be at least 1");
  return opts;
}

}  // namespace

ParsedInstance parse_instance_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(origin, "top level must be an object");

  const Eigen::Index n = get_positive_index(j, "n", origin);
  const Eigen::Index m = get_positive_index(j, "m", origin);

  for (const char* field : {"A", "B", "R", "H"}) {
    if (!j.contains(field)) fail(origin, std::string("missing matrix \"") + field + "\"");
  }

  Tolerances tols;
  const ComplexMatrix A = matrix_from_pairs(j["A"], n, n, "A", origin);
  const ComplexMatrix B = matrix_from_pairs(j["B"], n, m, "B", origin);
  const HermitianMatrix R = hermitian_field(j["R"], m, "R", origin, tols.hermitian_input);
  const HermitianMatrix H = hermitian_field(j["H"], n, "H", origin, tols.hermitian_input);

  std::optional<ProblemInstance> problem;
  try {
    problem.emplace(A, B, R.matrix(), H.matrix(), tols);
  } catch (const Error& e) {
    fail(origin, e.what());
  }

  ParsedInstance out{std::move(*problem), std::nullopt, std::nullopt, std::nullopt, {}};
  if (j.contains("x_T_witness")) {
    out.x_T_witness =
        hermitian_field(j["x_T_witness"], n, "x_T_witness", origin, tols.hermitian_input);
  }
  if (j.contains("x_P_witness")) {
    out.x_P_witness =
        hermitian_field(j["x_P_witness"], n, "x_P_witness", origin, tols.hermitian_input);
  }
  if (j.contains("x0_state")) {
    out.x0_state = matrix_from_pairs(j["x0_state"], n, 1, "x0_state", origin).col(0);
  }
  if (j.contains("options")) {
    out.options = options_from_json(j["options"], origin);
  }
  return out;
}

ParsedInstance parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string() + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str(), path.string());
}

std::string serialize_instance(const ProblemInstance& P,
                               const std::optional<HermitianMatrix>& x_T_witness,
                               const std::optional<HermitianMatrix>& x_P_witness,
                               const std::optional<ComplexVector>& x0_state,
                               const std::optional<SolverOptions>& options) {
  json j;
  j["n"] = static_cast<long long>(P.n());
  j["m"] = static_cast<long long>(P.m());
  j["A"] = matrix_to_pairs(P.A());
  j["B"] = matrix_to_pairs(P.B());
  j["R"] = matrix_to_pairs(P.R().matrix());
  j["H"] = matrix_to_pairs(P.H().matrix());
  if (x_T_witness) j["x_T_witness"] = matrix_to_pairs(x_T_witness->matrix());
  if (x_P_witness) j["x_P_witness"] = matrix_to_pairs(x_P_witness->matrix());
  if (x0_state) j["x0_state"] = matrix_to_pairs(*x0_state);
  if (options) {
    j["options"] = {{"tol_residual", options->tol_residual},
                    {"max_iter", options->max_iter},
                    {"psd_tol", options->psd_tol},
                    {"check_monotone", options->check_monotone},
                    {"check_stability", options->check_stability},
                    {"record_trace", options->record_trace}};
  }
  return j.dump(2);
}

HermitianMatrix parse_hermitian_payload(const std::string& text, Eigen::Index n,
                                        const std::string& label) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(label + ": invalid JSON: " + e.what());
  }
  Tolerances tols;
  return hermitian_field(j, n, label, label, tols.hermitian_input);
}

}  // namespace cdare
