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

// Slow, obviously-correct references shared by the test binaries.

#ifndef EBUG_TESTS_ORACLES_HPP_
#define EBUG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ebug/field.hpp"
#include "ebug/words.hpp"

namespace ebug::testing {

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::string rot(const std::string& w, std::size_t i) {
  i %= w.size();
  return w.substr(i) + w.substr(0, i);
}

// Least rotation by trying them all.
inline std::string min_rotation(const std::string& w) {
  std::string best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, rot(w, i));
  return best;
}

inline std::string digits(std::uint64_t code, std::uint32_t q, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t j = n; j-- > 0;) {
    s[j] = symbol_char(static_cast<Symbol>(code % q));
    code /= q;
  }
  return s;
}

// Distinct least rotations of all q^n strings.
inline std::set<std::string> necklaces(std::uint32_t q, std::size_t n) {
  std::set<std::string> out;
  for (std::uint64_t c = 0; c < ipow(q, n); ++c) out.insert(min_rotation(digits(c, q, n)));
  return out;
}

inline bool aperiodic(const std::string& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (rot(w, i) == w) return false;
  }
  return true;
}

inline std::string cyc_window(const std::string& w, std::size_t i, std::size_t len) {
  std::string s;
  for (std::size_t j = 0; j < len; ++j) s.push_back(w[(i + j) % w.size()]);
  return s;
}

// Quadratic check over all (word, rotation) pairs.
inline bool valid_quadratic(const Colouring& c) {
  std::vector<std::string> wins;
  for (const auto& w : c.words()) {
    const auto s = w.to_string();
    for (std::size_t r = 0; r < s.size(); ++r) wins.push_back(cyc_window(s, r, c.l()));
  }
  for (std::size_t i = 0; i < wins.size(); ++i) {
    for (std::size_t j = i + 1; j < wins.size(); ++j) {
      if (wins[i] == wins[j]) return false;
    }
  }
  return true;
}

inline std::vector<std::string> strings(const Colouring& c) {
  std::vector<std::string> out;
  for (const auto& w : c.words()) out.push_back(w.to_string());
  return out;
}

inline std::multiset<std::string> canonical_set(const std::vector<std::string>& ws) {
  std::multiset<std::string> out;
  for (const auto& w : ws) out.insert(min_rotation(w));
  return out;
}

inline Colouring colouring(std::uint32_t q, std::size_t l, const std::vector<std::string>& ws) {
  std::vector<CyclicWord> words;
  for (const auto& w : ws) words.push_back(CyclicWord::from_string(w));
  return Colouring(q, ws.empty() ? l : ws[0].size(), l, std::move(words));
}

// Every (q, k, l) colouring covers q^l vertices exactly once.
inline bool optimal(const Colouring& c) {
  return valid_quadratic(c) && c.size() * c.k() == ipow(c.q(), c.l());
}

// The eight quaternary 8-necklaces obtained by multiplying two binary
// de Bruijn necklaces, in the published order.
inline const std::vector<std::string>& quaternary_eight() {
  static const std::vector<std::string> w = {"00030333", "10021233", "11020323", "11120232",
                                             "01130223", "10131222", "01031322", "00121332"};
  return w;
}

struct TableRow {
  int i = 0;
  int j = 0;
  std::vector<std::string> words;
};

inline std::vector<TableRow> load_interleave_table() {
  std::ifstream in(std::string(EBUG_TEST_DATA_DIR) + "/interleave_table.txt");
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    TableRow r;
    ss >> r.i >> r.j;
    std::string w;
    while (ss >> w) r.words.push_back(w);
    rows.push_back(r);
  }
  return rows;
}

// Power-basis product modulo x^l - sum p_i x^i, written out longhand.
inline std::vector<Symbol> slow_polymul(const BaseField& f, const std::vector<Symbol>& a,
                                        const std::vector<Symbol>& b,
                                        const std::vector<Symbol>& p) {
  const std::size_t l = p.size();
  std::vector<Symbol> prod(2 * l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  for (std::size_t d = 2 * l - 1; d >= l; --d) {
    const Symbol top = prod[d];
    prod[d] = 0;
    for (std::size_t i = 0; i < l; ++i) prod[d - l + i] = f.add(prod[d - l + i], f.mul(top, p[i]));
  }
  prod.resize(l);
  return prod;
}

}  // namespace ebug::testing

#endif  // EBUG_TESTS_ORACLES_HPP_
