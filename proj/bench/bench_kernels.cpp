// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP variant for the solver kernels.
//
//   bench_kernels [--benchmark_filter=...]
//
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "ncagm/sdp/kernels.hpp"
#include "ncagm/sos/compiler.hpp"

namespace {

using namespace ncagm;
namespace k = ncagm::sdp::kernels;

template <class Real>
k::Matrix<Real> random_pd(int dim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = normal(rng);
  Eigen::MatrixXd a = g * g.transpose() / dim + Eigen::MatrixXd::Identity(dim, dim);
  return a.cast<Real>();
}

template <class Real>
struct SchurCase {
  k::BlockRows<Real> data;
  k::Matrix<Real> x, zinv;
  int constraints = 0;

  SchurCase(int m, int n) {
    const auto p = sos::assemble_sdp(m, n, sos::Sign::plus);
    std::vector<const sdp::SparseSymmetric*> rows;
    for (const auto& c : p.constraints) rows.push_back(&c.matrix);
    auto blocks = k::split_by_block<Real>(p.blocks, rows);
    // The largest dense block dominates the Schur assembly cost.
    auto it = std::max_element(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
      return (a.kind == sdp::BlockKind::dense ? a.size : 0) < (b.kind == sdp::BlockKind::dense ? b.size : 0);
    });
    data = std::move(*it);
    x = random_pd<Real>(data.size, 1);
    zinv = random_pd<Real>(data.size, 2);
    constraints = static_cast<int>(rows.size());
  }
};

template <class Real, bool Parallel>
void BM_Schur(benchmark::State& state) {
  const SchurCase<Real> c(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  k::Matrix<Real> schur(c.constraints, c.constraints);
  for (auto _ : state) {
    schur.setZero();
    if constexpr (Parallel) {
      k::schur_dense_parallel(c.data, c.x, c.zinv, schur);
    } else {
      k::schur_dense_serial(c.data, c.x, c.zinv, schur);
    }
    benchmark::DoNotOptimize(schur.data());
  }
  state.counters["block"] = c.data.size;
  state.counters["rows"] = static_cast<double>(c.data.rows.size());
}

template <class Real, bool Parallel>
void BM_PivotedCholesky(benchmark::State& state) {
  const auto a = random_pd<Real>(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    auto f = Parallel ? k::pivoted_cholesky_parallel<Real>(a, Real(1e-14)) : k::pivoted_cholesky_serial<Real>(a, Real(1e-14));
    benchmark::DoNotOptimize(f.lower.data());
  }
}

}  // namespace

BENCHMARK(BM_Schur<double, false>)->Args({4, 4})->Args({5, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Schur<double, true>)->Args({4, 4})->Args({5, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Schur<long double, false>)->Args({4, 4})->Args({5, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Schur<long double, true>)->Args({4, 4})->Args({5, 5})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PivotedCholesky<double, false>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PivotedCholesky<double, true>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PivotedCholesky<long double, false>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PivotedCholesky<long double, true>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
