#include <benchmark/benchmark.h>

#include <vector>

#include "svv/analysis.hpp"
#include "svv/families.hpp"
#include "svv/splitmix64.hpp"
#include "svv/trunc_poly.hpp"

namespace {

svv::TruncPoly dense_poly(const svv::RingShape& shape, std::uint64_t seed) {
  svv::SplitMix64 rng(seed);
  svv::TruncPoly p(shape);
  for (long i = 0; i < shape.lattice_size(); ++i)
    p.set_coefficient(shape.exps_of(i), svv::BigInt(rng.next_entry(9)));
  return p;
}

void BM_TruncPolyMul(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const svv::RingShape shape({d, d, d});
  const svv::TruncPoly a = dense_poly(shape, 1);
  const svv::TruncPoly b = dense_poly(shape, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a.mul(b));
}
BENCHMARK(BM_TruncPolyMul)->Arg(4)->Arg(8)->Arg(12);

void BM_ChernTopClass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const svv::BuiltFamily f = svv::build_fo(std::vector<int>(n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(svv::chern_top_class(f.H, f.d));
}
BENCHMARK(BM_ChernTopClass)->Arg(3)->Arg(4)->Arg(5);

void BM_SingleEdgeDegree(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const std::vector<int> dims(6, d);
  for (auto _ : state) benchmark::DoNotOptimize(svv::single_edge_degree(dims));
}
BENCHMARK(BM_SingleEdgeDegree)->Arg(4)->Arg(6)->Arg(8);

void BM_AnalyzeStar(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const svv::BuiltFamily f = svv::build_star(std::vector<int>(5, d));
  for (auto _ : state) benchmark::DoNotOptimize(svv::analyze(f.H, f.d));
}
BENCHMARK(BM_AnalyzeStar)->Arg(3)->Arg(4)->Arg(5);

}  // namespace
