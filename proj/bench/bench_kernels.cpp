// Serial reference kernels vs. their OpenMP versions. Set OMP_NUM_THREADS to
// compare thread counts.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "geneo/kernels.hpp"

namespace {

using geneo::EdgePolicy;
namespace k = geneo::kernels;

std::vector<double> make_input(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::sin(0.001 * static_cast<double>(i)) + 0.3 * std::cos(0.37 * i);
  return v;
}

template <bool Parallel>
void BM_ShiftExtremum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = make_input(n);
  std::vector<double> out(n);
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::shift_extremum(in, out, 440, EdgePolicy::ZeroExtend, k::Extremum::Min);
    } else {
      k::serial::shift_extremum(in, out, 440, EdgePolicy::ZeroExtend, k::Extremum::Min);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <bool Parallel>
void BM_BoxFilter(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto in = make_input(n);
  std::vector<double> out(n);
  const double step = 0.005, h = 2.0;
  const double radius = (1.0 / h) / step;
  for (auto _ : state) {
    if constexpr (Parallel) {
      k::box_filter(in, out, radius, step, h, EdgePolicy::ZeroExtend);
    } else {
      k::serial::box_filter(in, out, radius, step, h, EdgePolicy::ZeroExtend);
    }
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <bool Parallel>
void BM_MaxAbsDiff(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = make_input(n);
  auto b = a;
  for (double& v : b) v *= 1.01;
  for (auto _ : state) {
    double d = Parallel ? k::max_abs_diff(a, b) : k::serial::max_abs_diff(a, b);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

}  // namespace

BENCHMARK(BM_ShiftExtremum<false>)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_ShiftExtremum<true>)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_BoxFilter<false>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_BoxFilter<true>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_MaxAbsDiff<false>)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_MaxAbsDiff<true>)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
