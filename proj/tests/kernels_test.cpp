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

#include "ebug/kernels.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ebug/lfsr.hpp"
#include "ebug/necklace.hpp"
#include "oracles.hpp"

namespace ebug::kernels {
namespace {

namespace t = ebug::testing;

Colouring random_colouring(std::mt19937_64& rng, std::uint32_t q, std::size_t k, std::size_t l,
                           std::size_t n) {
  std::vector<CyclicWord> ws;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Symbol> s(k);
    for (auto& x : s) x = static_cast<Symbol>(rng() % q);
    ws.emplace_back(std::move(s));
  }
  return Colouring(q, k, l, std::move(ws));
}

TEST(Kernels, ValiditySerialAndParallelAgreeOnLargeInputs) {
  std::mt19937_64 rng(3);
  // Large enough to cross the parallel threshold.
  const auto big = lfsr_translate(2, 16);
  ASSERT_GE(big.size() * big.k(), kParallelValidityThreshold);
  EXPECT_EQ(validity_serial(big), validity_parallel(big));
  EXPECT_TRUE(validity_parallel(big).valid);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = random_colouring(rng, 2 + rng() % 3, 64, 8 + rng() % 8, 300);
    EXPECT_EQ(validity_serial(c), validity_parallel(c));
  }
}

TEST(Kernels, WalkValidityCountsDistinctWindows) {
  const auto c = t::colouring(2, 3, {"000000", "001001", "011011", "111111"});
  const auto r = walk_validity_serial(c);
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.window_count, 8U);
}

TEST(Kernels, ProductSerialMatchesParallel) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t l = 1 + rng() % 3;
    const auto a = random_colouring(rng, 2 + rng() % 3, l + rng() % 6, l, 1 + rng() % 4);
    const auto b = random_colouring(rng, 2 + rng() % 3, l + rng() % 6, l, 1 + rng() % 4);
    const auto s = product_serial(a, b);
    const auto p = product_parallel(a, b);
    ASSERT_EQ(s.size(), p.size());
    EXPECT_EQ(s.size(), std::gcd(a.k(), b.k()) * a.size() * b.size());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(s[i].identical(p[i]));
  }
}

TEST(Kernels, ProductPairsSymbols) {
  const auto a = t::colouring(2, 3, {"00010111"});
  const auto b = t::colouring(2, 3, {"01011100"});
  const auto out = product_serial(a, b);
  ASSERT_EQ(out.size(), 8U);
  // j = 0 pairs the words as given.
  EXPECT_EQ(out[0].to_string(), "01031322");
}

TEST(Kernels, InterleaveWords) {
  const std::vector<CyclicWord> ws = {CyclicWord::from_string("00030333"),
                                      CyclicWord::from_string("10021233")};
  EXPECT_EQ(interleave_words(ws).to_string(), "0100003201323333");
}

TEST(Kernels, InterleaveSerialMatchesParallel) {
  const auto reps = lfsr_split(3, 2, 4).words();
  for (std::size_t t : {1, 2, 4}) {
    const auto rots = interleave_rotations(4, t);
    const auto s = interleave_serial(reps, t, rots);
    const auto p = interleave_parallel(reps, t, rots);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(s[i].identical(p[i]));
  }
  const auto c = t::colouring(4, 3, t::quaternary_eight());
  const auto rots = interleave_rotations(8, 2);
  const auto s = interleave_serial(c.words(), 2, rots);
  const auto p = interleave_parallel(c.words(), 2, rots);
  ASSERT_EQ(s.size(), 256U);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(s[i].identical(p[i]));
}

}  // namespace
}  // namespace ebug::kernels
