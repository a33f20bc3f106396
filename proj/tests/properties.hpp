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

// Randomised property checks shared by the property test and the acceptance
// runner. Each function performs `count` checks and returns how many failed.

#ifndef EBUG_TESTS_PROPERTIES_HPP_
#define EBUG_TESTS_PROPERTIES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ebug/kernels.hpp"
#include "ebug/lfsr.hpp"
#include "ebug/necklace.hpp"
#include "ebug/numeric.hpp"
#include "oracles.hpp"

namespace ebug::testing {

inline CyclicWord random_word(std::mt19937_64& rng, std::uint32_t q, std::size_t k) {
  std::vector<Symbol> s(k);
  for (auto& x : s) x = static_cast<Symbol>(rng() % q);
  return CyclicWord(std::move(s));
}

// rotate(I(w_1, ..., w_t), 1) = I(w_2, ..., w_t, rotate(w_1, 1)).
inline std::size_t check_rotation_identity(std::mt19937_64& rng, std::size_t count) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t q = 2 + rng() % 4;
    const std::size_t k = 1 + rng() % 9;
    const std::size_t t = 1 + rng() % 4;
    std::vector<CyclicWord> ws;
    for (std::size_t j = 0; j < t; ++j) ws.push_back(random_word(rng, q, k));
    std::vector<CyclicWord> shifted(ws.begin() + 1, ws.end());
    shifted.push_back(ws[0].rotate(1));
    if (!kernels::interleave_words(ws).rotate(1).identical(kernels::interleave_words(shifted))) ++failures;
  }
  return failures;
}

// Random small colourings, biased towards valid ones by drawing distinct
// necklaces.
inline std::size_t check_validity_oracle(std::mt19937_64& rng, std::size_t count) {
  std::size_t failures = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t q = 2 + rng() % 3;
    const std::size_t k = 2 + rng() % 8;
    const std::size_t l = 1 + rng() % std::min<std::size_t>(k, 5);
    const std::size_t n = rng() % 6;
    std::vector<CyclicWord> ws;
    for (std::size_t j = 0; j < n; ++j) ws.push_back(random_word(rng, q, k));
    const Colouring c(q, k, l, std::move(ws));
    const bool expect = valid_quadratic(c);
    const auto serial = kernels::validity_serial(c);
    const auto parallel = kernels::validity_parallel(c);
    if (serial.valid != expect || !(parallel == serial) || is_valid(c).valid != expect) ++failures;
  }
  return failures;
}

// Known optimal partitions of modest size.
inline std::vector<Colouring> optimal_pool() {
  std::vector<Colouring> pool;
  for (std::uint32_t q : {2, 3, 4, 5}) pool.push_back(lfsr_translate(q, 1));
  for (auto [q, l] : {std::pair<std::uint32_t, unsigned>{3, 2}, {4, 2}, {5, 2}, {2, 3}, {3, 3}, {4, 3},
                      {2, 4}, {2, 5}}) {
    pool.push_back(lfsr_translate(q, l));
  }
  for (auto [q, l] : {std::pair<std::uint32_t, unsigned>{2, 2}, {3, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    const auto w = fkm_debruijn(q, l);
    pool.push_back(Colouring(q, w.size(), l, {w}));
    const auto v = lfsr_debruijn(q, l);
    pool.push_back(Colouring(q, v.size(), l, {v}));
  }
  return pool;
}

// Products and interleavings of optimal partitions are optimal partitions.
inline std::size_t check_optimality_preservation(std::mt19937_64& rng, std::size_t count) {
  static const auto pool = optimal_pool();
  std::size_t failures = 0;
  std::size_t done = 0;
  while (done < count) {
    const auto& a = pool[rng() % pool.size()];
    if (rng() % 2 == 0) {
      std::vector<const Colouring*> partners;
      for (const auto& b : pool) {
        if (b.l() == a.l() && ipow(std::uint64_t{a.q()} * b.q(), a.l()) <= (1U << 14)) {
          partners.push_back(&b);
        }
      }
      const auto& b = *partners[rng() % partners.size()];
      if (!optimal(product(a, b))) ++failures;
    } else {
      std::vector<std::size_t> ts;
      for (auto t : numeric::divisors(a.k())) {
        const auto out = numeric::checked_pow(a.q(), t * a.l());
        if (t >= 2 && out && *out <= (1U << 14)) ts.push_back(t);
      }
      if (ts.empty()) continue;
      if (!optimal(interleave(a, ts[rng() % ts.size()]))) ++failures;
    }
    ++done;
  }
  return failures;
}

}  // namespace ebug::testing

#endif  // EBUG_TESTS_PROPERTIES_HPP_
