#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cdare/instance_io.hpp"
#include "support/test_support.hpp"

using namespace cdare;
using namespace cdare::testing;

namespace {

const char* kScalarCaseI = R"({
  "n": 1, "m": 1,
  "A": [[2, 0]],
  "B": [[1, 0]],
  "R": [[1, 0]],
  "H": [[2, 0]]
})";

}  // namespace

TEST_CASE("minimal scalar file equals the programmatic instance") {
  const ParsedInstance parsed = parse_instance_text(kScalarCaseI);
  const ProblemInstance direct = scalar_embedding(2, 1, 1, 2);
  CHECK((parsed.problem.A() - direct.A()).norm() == 0.0);
  CHECK((parsed.problem.B() - direct.B()).norm() == 0.0);
  CHECK((parsed.problem.R() - direct.R()).spectral_norm() == 0.0);
  CHECK((parsed.problem.H() - direct.H()).spectral_norm() == 0.0);
  CHECK((parsed.problem.G() - direct.G()).spectral_norm() == 0.0);
  CHECK_FALSE(parsed.x_T_witness.has_value());
  CHECK_FALSE(parsed.x0_state.has_value());
}

TEST_CASE("round trip is bit exact") {
  Rng rng(81);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 4);
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(rng() % n);
    ProblemInstance P = rand_instance(rng, n, m);
    const HermitianMatrix W = rand_hermitian(rng, n);
    ComplexVector x0(n);
    for (Eigen::Index i = 0; i < n; ++i) x0(i) = randc(rng);
    SolverOptions opts;
    opts.tol_residual = 3.5e-11;
    opts.max_iter = 777;
    opts.record_trace = true;

    const std::string text = serialize_instance(P, W, std::nullopt, x0, opts);
    const ParsedInstance back = parse_instance_text(text);

    CHECK((back.problem.A() - P.A()).norm() == 0.0);
    CHECK((back.problem.B() - P.B()).norm() == 0.0);
    CHECK((back.problem.R() - P.R()).spectral_norm() == 0.0);
    CHECK((back.problem.H() - P.H()).spectral_norm() == 0.0);
    REQUIRE(back.x_T_witness.has_value());
    CHECK((*back.x_T_witness - W).spectral_norm() == 0.0);
    REQUIRE(back.x0_state.has_value());
    CHECK((*back.x0_state - x0).norm() == 0.0);
    CHECK(back.options.tol_residual == 3.5e-11);
    CHECK(back.options.max_iter == 777);
    CHECK(back.options.record_trace);
  }
}

TEST_CASE("diagnostics name the offending field") {
  // Singular R.
  const std::string singular_r = R"({"n":1,"m":1,
    "A":[[2,0]],"B":[[1,0]],"R":[[0,0]],"H":[[2,0]]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(singular_r),
                       doctest::Contains("singular"), ParseError);

  // Non-Hermitian H (H_01 != conj(H_10)).
  const std::string bad_h = R"({"n":2,"m":1,
    "A":[[1,0],[0,0],[0,0],[1,0]],
    "B":[[1,0],[0,0]],
    "R":[[1,0]],
    "H":[[1,0],[1,0],[2,0],[1,0]]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(bad_h), doctest::Contains("H"),
                       ParseError);

  // Length mismatch names the matrix.
  const std::string short_a = R"({"n":2,"m":1,
    "A":[[1,0]],
    "B":[[1,0],[0,0]],
    "R":[[1,0]],
    "H":[[1,0],[0,0],[0,0],[1,0]]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(short_a), doctest::Contains("A"),
                       ParseError);

  // Missing fields, malformed JSON, wrong dimensions.
  CHECK_THROWS_AS(parse_instance_text("{\"n\":1}"), ParseError);
  CHECK_THROWS_AS(parse_instance_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance_text(R"({"n":0,"m":1,"A":[],"B":[],"R":[],"H":[]})"),
                  ParseError);

  // Unknown solver option.
  const std::string bad_opt = R"({"n":1,"m":1,
    "A":[[2,0]],"B":[[1,0]],"R":[[1,0]],"H":[[2,0]],
    "options":{"tol":1e-9}})";
  CHECK_THROWS_WITH_AS(parse_instance_text(bad_opt), doctest::Contains("tol"),
                       ParseError);
}

TEST_CASE("file loading and missing files") {
  CHECK_THROWS_AS(parse_instance("/nonexistent/path/instance.json"), ParseError);
}

TEST_CASE("hermitian payload parser") {
  const HermitianMatrix W = parse_hermitian_payload("[[10, 0]]", 1, "w");
  CHECK(W.scalar_value() == 10.0);
  CHECK_THROWS_AS(parse_hermitian_payload("[[10, 0]]", 2, "w"), ParseError);
  CHECK_THROWS_AS(parse_hermitian_payload("oops", 1, "w"), ParseError);
}
