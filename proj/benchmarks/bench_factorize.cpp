// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
//
// Scaling benchmarks for the two factorizers. The interesting axis is the run
// count n at a fixed character count N: both algorithms are built to cost
// O(N + n log n), so doubling the mean run length should roughly halve the
// time after the encode pass.

#include <benchmark/benchmark.h>

#include "rlz/lz_offline.hpp"
#include "rlz/lz_online.hpp"
#include "rlz/rle.hpp"
#include "rlz/synth.hpp"

namespace {

rlz::RleString<unsigned char> make_input(std::int64_t n_chars, std::int64_t mean_run) {
  rlz::RunDist dist;
  dist.kind = rlz::RunDist::Kind::geometric;
  dist.rho = 1.0 / double(mean_run);
  const auto text = rlz::random_rle_text(std::uint64_t(n_chars), 4, dist, 0x5eed);
  return rlz::encode_bytes(text);
}

void bench_encode(benchmark::State& state) {
  rlz::RunDist dist;
  dist.rho = 1.0 / double(state.range(1));
  const auto text = rlz::random_rle_text(std::uint64_t(state.range(0)), 4, dist, 0x5eed);
  for (auto _ : state) {
    auto rle = rlz::encode_bytes(text);
    benchmark::DoNotOptimize(rle);
  }
  state.SetBytesProcessed(std::int64_t(state.iterations()) * state.range(0));
}

void bench_offline(benchmark::State& state) {
  const auto rle = make_input(state.range(0), state.range(1));
  for (auto _ : state) {
    auto factors = rlz::factorize_offline(rle);
    benchmark::DoNotOptimize(factors);
  }
  state.counters["runs"] = double(rle.size());
}

void bench_online(benchmark::State& state) {
  const auto rle = make_input(state.range(0), state.range(1));
  for (auto _ : state) {
    auto lengths = rlz::factorize_online(rle);
    benchmark::DoNotOptimize(lengths);
  }
  state.counters["runs"] = double(rle.size());
}

// {characters, mean run length}: one sweep over run density at fixed size,
// one over size at fixed density
void scaling_args(benchmark::internal::Benchmark* b) {
  for (const std::int64_t mean_run : {2, 8, 32, 128})
    b->Args({1 << 20, mean_run});
  for (const std::int64_t n_chars : {1 << 18, 1 << 19, 1 << 21})
    b->Args({n_chars, 8});
}

BENCHMARK(bench_encode)->Apply(scaling_args)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_offline)->Apply(scaling_args)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_online)->Apply(scaling_args)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
