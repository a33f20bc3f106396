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

#ifndef EBUG_ORACLE_HPP_
#define EBUG_ORACLE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ebug/error.hpp"
#include "ebug/words.hpp"

// Exhaustive ground truth at desk scale.
namespace ebug {

using Seconds = std::chrono::duration<double>;

struct SearchOptions {
  // Wall-clock limit; zero or negative means unlimited.
  Seconds budget{60.0};
  // Workers for the first-level fan-out; 1 runs the serial search.
  unsigned threads = 1;
};

struct SearchResult {
  std::size_t best_count = 0;
  Colouring witness;
  // True when best_count is proven maximal.
  bool exhausted = false;
  std::uint64_t nodes_expanded = 0;
  Seconds elapsed{0.0};
};

// Thrown when the wall-clock budget runs out; carries the best packing seen.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(SearchResult result);
  const SearchResult& result() const { return result_; }

 private:
  SearchResult result_;
};

// Largest set of vertex-disjoint k-cycles in dB(q, l). Branches on the
// smallest uncovered vertex, trying every k-cycle through it before leaving
// it uncovered. Stops as soon as floor(q^l / k) is reached. With several
// threads best_count and exhausted are unchanged but the witness may differ.
SearchResult max_k_cycles(std::uint32_t q, std::size_t k, std::size_t l,
                          const SearchOptions& options = {});

// Number of (q, l) de Bruijn cycles, counted by backtracking from 0^l.
// Needs q^l <= 16.
std::uint64_t enumerate_debruijn(std::uint32_t q, std::size_t l);

// The same cycles as words starting with 0^l.
std::vector<CyclicWord> enumerate_debruijn_words(std::uint32_t q, std::size_t l);

struct ConjectureCase {
  std::uint32_t q = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::uint64_t upper = 0;
  std::size_t best = 0;
  bool exhausted = false;
  bool budget_exceeded = false;
  Seconds elapsed{0.0};

  bool optimal() const { return best == upper; }
};

struct ConjectureReport {
  std::vector<ConjectureCase> cases;

  bool all_optimal() const;
  std::vector<ConjectureCase> failures() const;
};

// Every (q, k, l) with q^l <= max_size, k | q^l and l < k < q^l, searched
// for a partition into k-cycles.
ConjectureReport verify_conjecture(std::uint64_t max_size, const SearchOptions& per_case);

}  // namespace ebug

#endif  // EBUG_ORACLE_HPP_
