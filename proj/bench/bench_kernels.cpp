// Parallel kernels against their serial references:
//   oracle eigenvalues   OpenMP bisection vs serial bisection vs serial QL
//   verification batch   OpenMP over (q, relation) vs serial loop
#include <benchmark/benchmark.h>

#include <vector>

#include "qshape/algebra.hpp"
#include "qshape/oracle.hpp"
#include "qshape/tridiag.hpp"

namespace {

struct Tridiag {
  std::vector<double> d, e;
};

// Discretised Morse H1 on the default grid with `points` nodes.
Tridiag morse_operator(int points) {
  const auto m = qshape::PotentialModel::make(qshape::PotentialKind::Morse, {{"V0", 50.0}, {"lambda", 1.0}, {"b", 1.0}});
  auto grid = qshape::default_grid(m);
  grid.points = points;
  const double h = grid.spacing();
  Tridiag t;
  t.d.resize(points);
  t.e.assign(points - 1, -0.5 / (h * h));
  for (int i = 0; i < points; ++i) t.d[i] = 1.0 / (h * h) + m.partner_potential_V1(grid.x_min + (i + 1) * h);
  return t;
}

void BM_BisectionParallel(benchmark::State& state) {
  const auto t = morse_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qshape::tridiag::lowest_eigenvalues(t.d, t.e, 8));
}

void BM_BisectionSerial(benchmark::State& state) {
  const auto t = morse_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qshape::tridiag::lowest_eigenvalues_serial(t.d, t.e, 8));
}

void BM_QLReference(benchmark::State& state) {
  const auto t = morse_operator(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qshape::tridiag::eigenvalues_ql(t.d, t.e));
}

const double kQs[] = {0.6, 0.7, 0.8, 0.9, 1.1, 1.2, 1.3, 1.5};

void BM_VerifyParallel(benchmark::State& state) {
  const auto m = qshape::PotentialModel::make(qshape::PotentialKind::HarmonicOscillator, {{"omega", 1.0}});
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qshape::verify_batch(m, kQs, N));
}

void BM_VerifySerial(benchmark::State& state) {
  const auto m = qshape::PotentialModel::make(qshape::PotentialKind::HarmonicOscillator, {{"omega", 1.0}});
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qshape::verify_batch_serial(m, kQs, N));
}

}  // namespace

BENCHMARK(BM_BisectionParallel)->Arg(4000)->Arg(16001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BisectionSerial)->Arg(4000)->Arg(16001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QLReference)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
