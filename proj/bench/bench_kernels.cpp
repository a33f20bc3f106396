// Copyright 2026 The ebug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ebug/kernels.hpp"
#include "ebug/lfsr.hpp"
#include "ebug/necklace.hpp"

namespace {

using namespace ebug;


const Colouring& interleave_source() {
  static const Colouring c = lfsr_translate(2, 5);
  return c;
}

void BM_ValiditySerial(benchmark::State& state) {
  const auto c = lfsr_translate(static_cast<std::uint32_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::validity_serial(c));
}
void BM_ValidityParallel(benchmark::State& state) {
  const auto c = lfsr_translate(static_cast<std::uint32_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::validity_parallel(c));
}
BENCHMARK(BM_ValiditySerial)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_ValidityParallel)->Arg(4)->Arg(8)->Arg(16);

void BM_ProductSerial(benchmark::State& state) {
  const auto d = lfsr_translate(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::product_serial(d, d));
}
void BM_ProductParallel(benchmark::State& state) {
  const auto d = lfsr_translate(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::product_parallel(d, d));
}
BENCHMARK(BM_ProductSerial);
BENCHMARK(BM_ProductParallel);

void BM_InterleaveSerial(benchmark::State& state) {
  const auto& c = interleave_source();
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto rotations = interleave_rotations(c.k(), t);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::interleave_serial(c.words(), t, rotations));
}
void BM_InterleaveParallel(benchmark::State& state) {
  const auto& c = interleave_source();
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto rotations = interleave_rotations(c.k(), t);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::interleave_parallel(c.words(), t, rotations));
}
BENCHMARK(BM_InterleaveSerial)->Arg(2)->Arg(4);
BENCHMARK(BM_InterleaveParallel)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
