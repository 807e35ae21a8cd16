#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cdare/fpi.hpp"
#include "cdare/problem.hpp"

namespace cdare {

/// A problem instance file: dimensions, the four data matrices encoded as
/// row-major arrays of [re, im] pairs, optional witnesses, an optional
/// initial state, and an optional solver-options block.
struct ParsedInstance {
  ProblemInstance problem;
  std::optional<HermitianMatrix> x_T_witness;
  std::optional<HermitianMatrix> x_P_witness;
  std::optional<ComplexVector> x0_state;
  SolverOptions options;
};

/// Parses and validates an instance file. Diagnostics name the offending
/// field; violations (length mismatches, non-Hermitian R or H beyond the
/// input tolerance, singular R) throw ParseError.
ParsedInstance parse_instance(const std::filesystem::path& path);

/// Same, from an in-memory JSON document. `origin` labels diagnostics.
ParsedInstance parse_instance_text(const std::string& text,
                                   const std::string& origin = "<string>");

/// Serializes an instance (and any optional blocks) back to the file
/// schema. Numeric values round-trip bit-exactly.
std::string serialize_instance(const ProblemInstance& P,
                               const std::optional<HermitianMatrix>& x_T_witness = std::nullopt,
                               const std::optional<HermitianMatrix>& x_P_witness = std::nullopt,
                               const std::optional<ComplexVector>& x0_state = std::nullopt,
                               const std::optional<SolverOptions>& options = std::nullopt);

/// Parses a matrix payload of n*n [re, im] pairs (the witness encoding).
HermitianMatrix parse_hermitian_payload(const std::string& text, Eigen::Index n,
                                        const std::string& label);

}  // namespace cdare
