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

#ifndef EBUG_COUNTING_HPP_
#define EBUG_COUNTING_HPP_

#include <cstdint>
#include <vector>

// Bounds on the eBug number and the classical necklace counts.
namespace ebug {

// Sieved Moebius and totient values for 1..limit.
class CountingTables {
 public:
  explicit CountingTables(std::uint64_t limit);

  std::uint64_t limit() const { return mu_.size() - 1; }
  int mu(std::uint64_t n) const { return mu_.at(n); }
  std::uint64_t phi(std::uint64_t n) const { return phi_.at(n); }

 private:
  std::vector<int> mu_;
  std::vector<std::uint64_t> phi_;
};

// floor(q^l / k)
std::uint64_t upper_bound(std::uint64_t q, std::uint64_t k, std::uint64_t l);

// floor(q^l / ((2l - 1) e k)), from the local lemma.
std::uint64_t lll_lower_bound(std::uint64_t q, std::uint64_t k, std::uint64_t l);

// Number of aperiodic q-ary necklaces of length t.
std::uint64_t moreau(std::uint64_t q, std::uint64_t t);

// Number of q-ary necklaces of length l, via the totient formula.
std::uint64_t necklace_count(std::uint64_t q, std::uint64_t l);

// (q!)^{q^{l-1}} / q^l, exact; kOverflow when it does not fit in 64 bits.
std::uint64_t debruijn_count(std::uint64_t q, std::uint64_t l);

}  // namespace ebug

#endif  // EBUG_COUNTING_HPP_
