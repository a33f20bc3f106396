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

#ifndef EBUG_WORDS_HPP_
#define EBUG_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ebug/field.hpp"
#include "ebug/symbol.hpp"

namespace ebug {

// A finite word read cyclically. Equality is necklace equality: two words
// compare equal when one is a rotation of the other. Use identical() for
// symbol-by-symbol comparison.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  // Parses 0-9a-z; throws kMalformed on other characters.
  static CyclicWord from_string(std::string_view text);
  std::string to_string() const;

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  // Symbol at position i taken modulo the length.
  Symbol at_cyclic(std::size_t i) const { return symbols_[i % symbols_.size()]; }

  // Left rotation: rotate(1) maps a1 a2 ... ak to a2 ... ak a1.
  CyclicWord rotate(std::int64_t i) const;

  // The len-prefix of rotate(i), wrapping as often as needed.
  std::vector<Symbol> window(std::size_t i, std::size_t len) const;
  std::vector<std::vector<Symbol>> windows(std::size_t len) const;

  // Offset of the lexicographically least rotation (Booth).
  std::size_t least_rotation() const;
  CyclicWord canonical() const { return rotate(static_cast<std::int64_t>(least_rotation())); }

  // Smallest period; size of the necklace.
  std::size_t necklace_size() const;
  bool is_aperiodic() const { return necklace_size() == size(); }

  bool identical(const CyclicWord& other) const { return symbols_ == other.symbols_; }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b);

 private:
  std::vector<Symbol> symbols_;
};

// Orders necklaces by canonical form.
struct CanonicalLess {
  bool operator()(const CyclicWord& a, const CyclicWord& b) const;
};

// q colours, k LEDs per robot, windows of length l, one word per robot.
class Colouring {
 public:
  // Throws kInvalidInput when a word has the wrong length or a symbol >= q,
  // or when l > k or q is outside [1, 256].
  Colouring(std::uint32_t q, std::size_t k, std::size_t l, std::vector<CyclicWord> words);
  // Empty colouring with q = k = l = 1.
  Colouring() : Colouring(1, 1, 1, {}) {}

  std::uint32_t q() const { return q_; }
  std::size_t k() const { return k_; }
  std::size_t l() const { return l_; }
  const std::vector<CyclicWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }

  // Same parameters, every word replaced by its least rotation.
  Colouring canonicalized() const;

 private:
  std::uint32_t q_;
  std::size_t k_;
  std::size_t l_;
  std::vector<CyclicWord> words_;
};

struct WindowPosition {
  std::size_t word = 0;
  std::size_t rotation = 0;

  friend bool operator==(const WindowPosition&, const WindowPosition&) = default;
};

struct WindowConflict {
  std::vector<Symbol> window;
  WindowPosition first;
  WindowPosition second;

  friend bool operator==(const WindowConflict&, const WindowConflict&) = default;
};

struct ValidityReport {
  bool valid = false;
  // Distinct windows over the whole colouring.
  std::uint64_t window_count = 0;
  std::optional<WindowConflict> conflict;

  friend bool operator==(const ValidityReport&, const ValidityReport&) = default;
};

// Packs a window into a base-q integer when q^len fits in 64 bits.
class WindowCodec {
 public:
  WindowCodec(std::uint32_t q, std::size_t len);

  bool packed() const { return packed_; }
  std::uint64_t encode(std::span<const Symbol> window) const;
  // Window of w at rotation r without materialising it.
  std::uint64_t encode_at(const CyclicWord& w, std::size_t r) const;
  // All k window codes of w, rolling.
  void encode_all(const CyclicWord& w, std::uint64_t* out) const;
  std::vector<Symbol> decode(std::uint64_t code) const;

 private:
  std::uint32_t q_;
  std::size_t len_;
  bool packed_;
  std::uint64_t top_ = 1;  // q^{len-1}
};

// l-validity: every window over every rotation of every word is distinct.
// The first conflict is reported in scan order (word, then rotation).
ValidityReport is_valid(const Colouring& c);

// Identification-only validity: a window may repeat inside one word, but no
// window may occur in two different words.
ValidityReport is_walk_valid(const Colouring& c);

// Valid and covering every vertex of dB(q, l).
bool is_optimal_partition(const Colouring& c);

// Symbol stream of a closed walk of field elements. Consecutive states
// (cyclically) must be de Bruijn adjacent; throws kNotAWalk otherwise.
CyclicWord field_cycle_to_word(std::span<const FieldElement> states);

}  // namespace ebug

#endif  // EBUG_WORDS_HPP_
