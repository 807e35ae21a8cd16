#include <benchmark/benchmark.h>

#include <random>

#include "cdare/fpi.hpp"
#include "cdare/problem.hpp"
#include "cdare/stein.hpp"

namespace {

using namespace cdare;

ComplexMatrix rand_complex(std::mt19937_64& rng, Eigen::Index rows,
                           Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      M(i, j) = Complex(normal(rng), normal(rng));
    }
  }
  return M;
}

ComplexMatrix contraction(std::mt19937_64& rng, Eigen::Index n, double rho) {
  ComplexMatrix A = rand_complex(rng, n, n);
  A *= std::sqrt(rho / spectral_radius(A.conjugate() * A));
  return A;
}

ProblemInstance make_instance(std::mt19937_64& rng, Eigen::Index n, Eigen::Index m) {
  const ComplexMatrix A = contraction(rng, n, 0.5);
  const ComplexMatrix B = rand_complex(rng, n, m);
  const ComplexMatrix V = rand_complex(rng, n, n);
  const ComplexMatrix W = rand_complex(rng, m, m);
  const ComplexMatrix H = V * V.adjoint();
  const ComplexMatrix R =
      W * W.adjoint() + ComplexMatrix::Identity(m, m);
  return ProblemInstance(A, B, R, H);
}

void BM_riccati_op(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const Eigen::Index n = state.range(0);
  ProblemInstance P = make_instance(rng, n, std::max<Eigen::Index>(1, n / 2));
  HermitianMatrix X(rand_complex(rng, n, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riccati_op(P, X));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_riccati_op)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_stein_solve(benchmark::State& state) {
  std::mt19937_64 rng(8);
  const Eigen::Index n = state.range(0);
  const ComplexMatrix A = contraction(rng, n, 0.6);
  HermitianMatrix Q(rand_complex(rng, n, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stein_solve(A, Q));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_stein_solve)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_spectral_radius(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const Eigen::Index n = state.range(0);
  const ComplexMatrix M = rand_complex(rng, n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral_radius(M));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_spectral_radius)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_fpi_solve(benchmark::State& state) {
  std::mt19937_64 rng(10);
  const Eigen::Index n = state.range(0);
  ProblemInstance P = make_instance(rng, n, std::max<Eigen::Index>(1, n / 2));
  const HermitianMatrix X0 = initial_matrix(P, HermitianMatrix::zero(n));
  SolverOptions opts;
  opts.x0_certified = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fpi_solve(P, X0, opts));
  }
}
BENCHMARK(BM_fpi_solve)->RangeMultiplier(2)->Range(4, 16);

}  // namespace

BENCHMARK_MAIN();
