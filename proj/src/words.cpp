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

#include "ebug/words.hpp"

#include <algorithm>
#include <string>

#include "ebug/counting.hpp"
#include "ebug/error.hpp"
#include "ebug/kernels.hpp"
#include "ebug/numeric.hpp"

namespace ebug {

CyclicWord CyclicWord::from_string(std::string_view text) {
  std::vector<Symbol> s;
  s.reserve(text.size());
  for (char c : text) {
    const auto v = parse_symbol(c);
    if (!v) throw Error(Errc::kMalformed, std::string("bad symbol '") + c + "'");
    s.push_back(*v);
  }
  return CyclicWord(std::move(s));
}

std::string CyclicWord::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(symbol_char(s));
  return out;
}

CyclicWord CyclicWord::rotate(std::int64_t i) const {
  if (symbols_.empty()) return *this;
  const auto n = static_cast<std::int64_t>(symbols_.size());
  const auto shift = static_cast<std::size_t>(((i % n) + n) % n);
  std::vector<Symbol> r(symbols_.size());
  std::rotate_copy(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(shift),
                   symbols_.end(), r.begin());
  return CyclicWord(std::move(r));
}

std::vector<Symbol> CyclicWord::window(std::size_t i, std::size_t len) const {
  std::vector<Symbol> w(len);
  const std::size_t n = symbols_.size();
  for (std::size_t j = 0; j < len; ++j) w[j] = symbols_[(i + j) % n];
  return w;
}

std::vector<std::vector<Symbol>> CyclicWord::windows(std::size_t len) const {
  std::vector<std::vector<Symbol>> out;
  out.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) out.push_back(window(i, len));
  return out;
}

std::size_t CyclicWord::least_rotation() const {
  const std::size_t n = symbols_.size();
  if (n == 0) return 0;
  // Booth's algorithm on the doubled word.
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  auto s = [&](std::size_t i) { return symbols_[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Symbol sj = s(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < s(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != s(k + static_cast<std::size_t>(i + 1))) {
      if (sj < s(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::size_t CyclicWord::necklace_size() const {
  const std::size_t n = symbols_.size();
  if (n == 0) return 0;
  // KMP failure function gives the shortest period of the linear word;
  // it is a cyclic period only when it divides n.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, len = 0; i < n;) {
    if (symbols_[i] == symbols_[len]) {
      fail[i++] = ++len;
    } else if (len) {
      len = fail[len - 1];
    } else {
      fail[i++] = 0;
    }
  }
  const std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

bool operator==(const CyclicWord& a, const CyclicWord& b) {
  if (a.size() != b.size()) return false;
  return a.canonical().symbols_ == b.canonical().symbols_;
}

bool CanonicalLess::operator()(const CyclicWord& a, const CyclicWord& b) const {
  const auto ca = a.canonical();
  const auto cb = b.canonical();
  return std::lexicographical_compare(ca.symbols().begin(), ca.symbols().end(),
                                      cb.symbols().begin(), cb.symbols().end());
}

Colouring::Colouring(std::uint32_t q, std::size_t k, std::size_t l, std::vector<CyclicWord> words)
    : q_(q), k_(k), l_(l), words_(std::move(words)) {
  if (q_ < 1 || q_ > kMaxAlphabet) {
    throw Error(Errc::kInvalidInput, "alphabet size " + std::to_string(q_) + " out of range");
  }
  if (k_ < 1 || l_ < 1) throw Error(Errc::kInvalidInput, "k and l must be positive");
  if (l_ > k_) {
    throw Error(Errc::kInvalidInput, "window length " + std::to_string(l_) +
                                         " exceeds word length " + std::to_string(k_));
  }
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i].size() != k_) {
      throw Error(Errc::kInvalidInput, "word " + std::to_string(i) + " has length " +
                                           std::to_string(words_[i].size()) + ", expected " +
                                           std::to_string(k_));
    }
    for (Symbol s : words_[i].symbols()) {
      if (s >= q_) {
        throw Error(Errc::kInvalidInput, "word " + std::to_string(i) + " uses symbol " +
                                             std::to_string(s) + " >= q");
      }
    }
  }
}

Colouring Colouring::canonicalized() const {
  std::vector<CyclicWord> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back(w.canonical());
  return Colouring(q_, k_, l_, std::move(out));
}

WindowCodec::WindowCodec(std::uint32_t q, std::size_t len) : q_(q), len_(len) {
  const auto full = numeric::checked_pow(q, len);
  packed_ = full.has_value() && len >= 1;
  if (packed_) top_ = *full / q;
}

std::uint64_t WindowCodec::encode(std::span<const Symbol> window) const {
  std::uint64_t v = 0;
  for (Symbol s : window) v = v * q_ + s;
  return v;
}

std::uint64_t WindowCodec::encode_at(const CyclicWord& w, std::size_t r) const {
  std::uint64_t v = 0;
  const std::size_t n = w.size();
  for (std::size_t j = 0; j < len_; ++j) v = v * q_ + w[(r + j) % n];
  return v;
}

void WindowCodec::encode_all(const CyclicWord& w, std::uint64_t* out) const {
  const std::size_t n = w.size();
  if (n == 0) return;
  std::uint64_t v = encode_at(w, 0);
  out[0] = v;
  for (std::size_t r = 1; r < n; ++r) {
    v = (v - w[r - 1] * top_) * q_ + w[(r - 1 + len_) % n];
    out[r] = v;
  }
}

std::vector<Symbol> WindowCodec::decode(std::uint64_t code) const {
  std::vector<Symbol> w(len_);
  for (std::size_t j = len_; j-- > 0;) {
    w[j] = static_cast<Symbol>(code % q_);
    code /= q_;
  }
  return w;
}

ValidityReport is_valid(const Colouring& c) {
  if (c.size() * c.k() >= kernels::kParallelValidityThreshold) {
    return kernels::validity_parallel(c);
  }
  return kernels::validity_serial(c);
}

ValidityReport is_walk_valid(const Colouring& c) { return kernels::walk_validity_serial(c); }

bool is_optimal_partition(const Colouring& c) {
  const auto total = numeric::checked_pow(c.q(), c.l());
  if (!total) return false;
  const auto used = numeric::checked_mul(c.size(), c.k());
  if (!used || *used != *total) return false;
  return is_valid(c).valid;
}

CyclicWord field_cycle_to_word(std::span<const FieldElement> states) {
  if (states.empty()) throw Error(Errc::kNotAWalk, "empty state sequence");
  std::vector<Symbol> out;
  out.reserve(states.size());
  const std::size_t len = states[0].coords.size();
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& cur = states[i].coords;
    const auto& next = states[(i + 1) % states.size()].coords;
    if (cur.size() != len || next.size() != len || len == 0) {
      throw Error(Errc::kNotAWalk, "states of differing length");
    }
    if (!std::equal(cur.begin() + 1, cur.end(), next.begin())) {
      throw Error(Errc::kNotAWalk, "state " + std::to_string(i) + " is not followed by a shift");
    }
    out.push_back(cur[0]);
  }
  return CyclicWord(std::move(out));
}

}  // namespace ebug
