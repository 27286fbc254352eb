#include <benchmark/benchmark.h>

#include <random>

#include "szq/gf2m.hpp"
#include "szq/matgrp.hpp"
#include "szq/oracle.hpp"
#include "szq/orderstats.hpp"
#include "szq/suzuki.hpp"

namespace {

using namespace szq;

// m = 2 uses log tables; m = 11 (degree 23) falls back to polynomial reduction.
void BM_FieldMul(benchmark::State& state) {
  const auto f = Field::create(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<Field::Raw> xs(1024);
  for (auto& x : xs) x = static_cast<Field::Raw>(rng() % f->order());
  Field::Raw acc = 1;
  std::size_t i = 0;
  for (auto _ : state) {
    acc = f->mul_raw(acc ^ xs[i++ & 1023], xs[(i * 7) & 1023]) | 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(11);

void BM_MatMul(benchmark::State& state) {
  const auto f = Field::create(static_cast<unsigned>(state.range(0)));
  const auto gens = standard_generators(make_params(f->m()), f, Certify::kStructural);
  Mat4 x = gens[0];
  for (auto _ : state) {
    x = mat_mul(x, gens[2]);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_MatMul)->Arg(1)->Arg(2);

void BM_EnumerateSz8(benchmark::State& state) {
  const auto f = Field::create(1);
  const auto gens = standard_generators(make_params(1), f, Certify::kStructural);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(gens, 29120).size());
}
BENCHMARK(BM_EnumerateSz8)->Unit(benchmark::kMillisecond);

void BM_PackedClosureSz8(benchmark::State& state) {
  const auto f = Field::create(1);
  const auto gens = standard_generators(make_params(1), f, Certify::kStructural);
  for (auto _ : state) benchmark::DoNotOptimize(closure_size_packed(gens, 29120));
}
BENCHMARK(BM_PackedClosureSz8)->Unit(benchmark::kMillisecond);

void BM_NseClosedForm(benchmark::State& state) {
  const auto p = make_params(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nse_closed_form(p).counts.size());
}
BENCHMARK(BM_NseClosedForm)->Arg(1)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
