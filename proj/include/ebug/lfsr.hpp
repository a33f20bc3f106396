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

#ifndef EBUG_LFSR_HPP_
#define EBUG_LFSR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ebug/field.hpp"
#include "ebug/words.hpp"

// Colourings built from linear feedback shift registers over GF(q^l).
// Every function accepts an optional feedback-coefficient override; when
// absent the lexicographically smallest primitive polynomial is used.
namespace ebug {

using Coeffs = std::optional<std::vector<Symbol>>;

// De Bruijn cycle of dB(q, l): the LFSR run from 1 with the all-zero vertex
// spliced in right after state 1, so the word contains 1 0^l.
CyclicWord lfsr_debruijn(std::uint32_t q, unsigned l, const Coeffs& coeffs = std::nullopt);

// q - 1 disjoint k-cycles: word e follows beta_e, alpha beta_e, ... with
// beta_e = alpha e / (alpha^k - 1). Requires 1 <= k <= (q^l - 1)/(q - 1).
Colouring lfsr_split(std::uint32_t q, unsigned l, std::uint64_t k,
                     const Coeffs& coeffs = std::nullopt);

// The maps xi_e(b) = alpha b + alpha e on GF(q^d) and their fixed points
// phi_e = alpha e / (1 - alpha). The out-edges of each vertex b are exactly
// {xi_e(b)}, so P_e = {(b, xi_e(b))} partitions the edges of dB(q, d).
class TranslationSystem {
 public:
  // kDegenerateField when alpha = 1 (q^d < 3).
  explicit TranslationSystem(ExtensionField field);

  const ExtensionField& field() const { return field_; }
  const FieldElement& fixed_point(Symbol e) const { return fixed_points_.at(e); }
  FieldElement xi(Symbol e, const FieldElement& b) const;

 private:
  ExtensionField field_;
  std::vector<FieldElement> fixed_points_;
};

// q words of length q^{l-1} partitioning dB(q, l). The fixed points phi_e
// are the constant vertices c^{l-1}. Word c is the LFSR cycle of
// GF(q^{l-1}) translated onto c^{l-1}, with the loop at (c+1)^{l-1} inserted
// at its first occurrence, so word 0 carries the all-ones loop. Words come
// out in generation order (c = 0, 1, ...; each starting at the translate
// of 1).
// For l = 1 returns the q one-symbol loop words.
Colouring lfsr_translate(std::uint32_t q, unsigned l, const Coeffs& coeffs = std::nullopt);

// (q^l - 1)/k disjoint k-cycles from an element beta of order k. Word j is
// the beta-LFSR run from alpha^j. Requires k | q^l - 1 and k not dividing
// q^i - 1 for any i < l (kOrderTooSmall otherwise).
Colouring nonprimitive_cycles(std::uint32_t q, unsigned l, std::uint64_t k,
                              const Coeffs& coeffs = std::nullopt);

// Every k > 1 dividing q^l - 1 but no q^i - 1 with i < l, ascending.
std::vector<std::uint64_t> zsigmondy_ks(std::uint64_t q, unsigned l);

}  // namespace ebug

#endif  // EBUG_LFSR_HPP_
