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

#include "ebug/necklace.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "ebug/error.hpp"
#include "ebug/numeric.hpp"

namespace ebug {
namespace {

constexpr std::uint64_t kMaxGraphVertices = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxRotationTuples = std::uint64_t{1} << 24;

// Duval's iteration: every Lyndon word of length <= n, lexicographic.
template <typename Fn>
void for_each_lyndon(std::uint32_t q, std::size_t n, Fn&& emit) {
  if (q == 0 || n == 0) return;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    emit(w);
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<int>(q) - 1) w.pop_back();
  }
}

CyclicWord to_word(const std::vector<int>& w) {
  return CyclicWord(std::vector<Symbol>(w.begin(), w.end()));
}

// Canonical necklaces of length l, ascending.
std::vector<CyclicWord> enumerate_necklaces(std::uint32_t q, std::size_t l) {
  const auto total = numeric::checked_pow(q, l);
  if (!total || *total > kMaxGraphVertices) {
    throw Error(Errc::kTooLarge, "q^l exceeds 2^20 necklace enumeration limit");
  }
  std::vector<CyclicWord> out;
  std::vector<Symbol> w(l, 0);
  for (std::uint64_t code = 0; code < *total; ++code) {
    std::uint64_t v = code;
    for (std::size_t j = l; j-- > 0;) {
      w[j] = static_cast<Symbol>(v % q);
      v /= q;
    }
    CyclicWord word(w);
    if (word.least_rotation() == 0) out.push_back(std::move(word));
  }
  return out;
}

void require_valid(const Colouring& c, const char* what) {
  if (!is_valid(c).valid) throw Error(Errc::kInvalidInput, std::string(what) + " is not valid");
}

std::string window_key(const CyclicWord& w, std::size_t r, std::size_t len) {
  const auto win = w.window(r, len);
  return std::string(win.begin(), win.end());
}

struct Forest {
  std::vector<std::size_t> parent;  // self for roots
  std::vector<std::size_t> preorder;
  std::vector<std::vector<std::size_t>> children;
};

Forest dfs_forest(const std::vector<std::vector<std::size_t>>& adj, std::size_t first_root,
                  bool descending) {
  const std::size_t n = adj.size();
  Forest f{std::vector<std::size_t>(n, n), {}, std::vector<std::vector<std::size_t>>(n)};
  std::vector<bool> seen(n, false);
  auto run = [&](std::size_t root) {
    if (seen[root]) return;
    seen[root] = true;
    f.parent[root] = root;
    f.preorder.push_back(root);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nbrs = adj[v];
      if (next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t u = descending ? nbrs[nbrs.size() - 1 - next] : nbrs[next];
      ++next;
      if (seen[u]) continue;
      seen[u] = true;
      f.parent[u] = v;
      f.children[v].push_back(u);
      f.preorder.push_back(u);
      stack.emplace_back(u, 0);
    }
  };
  run(first_root);
  for (std::size_t v = 0; v < n; ++v) run(v);
  return f;
}

// Component id per vertex, or empty when the forest cannot be cut into
// t-vertex subtrees leaf-first.
std::vector<std::size_t> carve(const Forest& f, std::size_t t) {
  const std::size_t n = f.parent.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<bool> cut(n, false);
  for (auto it = f.preorder.rbegin(); it != f.preorder.rend(); ++it) {
    const std::size_t v = *it;
    std::size_t size = 1;
    for (std::size_t c : f.children[v]) size += pending[c];
    if (size > t) return {};
    if (size == t) {
      cut[v] = true;
      size = 0;
    }
    pending[v] = size;
    if (f.parent[v] == v && size != 0) return {};
  }
  std::vector<std::size_t> comp(n, 0);
  std::size_t next = 0;
  for (std::size_t v : f.preorder) comp[v] = cut[v] ? next++ : comp[f.parent[v]];
  return comp;
}

CyclicWord splice_component(const NecklaceGraph& g, const std::vector<std::size_t>& parent,
                            const std::vector<std::size_t>& members) {
  const std::size_t len = g.l - 1;
  CyclicWord joined = g.vertices[members[0]];
  for (std::size_t idx = 1; idx < members.size(); ++idx) {
    const std::size_t v = members[idx];
    const auto& parent_word = g.vertices[parent[v]];
    const auto& child = g.vertices[v];
    std::unordered_set<std::string> parent_windows;
    for (std::size_t r = 0; r < parent_word.size(); ++r) {
      parent_windows.insert(window_key(parent_word, r, len));
    }
    std::size_t child_rot = child.size();
    for (std::size_t r = 0; r < child.size(); ++r) {
      if (parent_windows.count(window_key(child, r, len))) {
        child_rot = r;
        break;
      }
    }
    if (child_rot == child.size()) throw Error(Errc::kCarvingFailed, "tree edge without shared window");
    const auto shared = window_key(child, child_rot, len);
    std::size_t at = joined.size();
    for (std::size_t r = 0; r < joined.size(); ++r) {
      if (window_key(joined, r, len) == shared) {
        at = r;
        break;
      }
    }
    if (at == joined.size()) throw Error(Errc::kCarvingFailed, "shared window lost while splicing");
    // Both circuits now start at the shared vertex of dB(q, l-1); walking one
    // then the other is a single closed circuit.
    const auto a = joined.rotate(static_cast<std::int64_t>(at));
    const auto b = child.rotate(static_cast<std::int64_t>(child_rot));
    std::vector<Symbol> merged(a.symbols().begin(), a.symbols().end());
    merged.insert(merged.end(), b.symbols().begin(), b.symbols().end());
    joined = CyclicWord(std::move(merged));
  }
  return joined;
}

}  // namespace

std::vector<CyclicWord> lyndon_words(std::uint32_t q, std::size_t n) {
  std::vector<CyclicWord> out;
  for_each_lyndon(q, n, [&](const std::vector<int>& w) {
    if (w.size() == n) out.push_back(to_word(w));
  });
  return out;
}

CyclicWord fkm_debruijn(std::uint32_t q, std::size_t l) {
  if (q < 1 || q > kMaxAlphabet || l == 0) throw Error(Errc::kInvalidInput, "need q >= 1, l >= 1");
  if (!numeric::checked_pow(q, l)) throw Error(Errc::kOverflow, "q^l exceeds 64 bits");
  std::vector<Symbol> out;
  for_each_lyndon(q, l, [&](const std::vector<int>& w) {
    if (l % w.size() == 0) out.insert(out.end(), w.begin(), w.end());
  });
  return CyclicWord(std::move(out));
}

Colouring product(const Colouring& a, const Colouring& b) {
  if (a.l() != b.l()) {
    throw Error(Errc::kWindowMismatch, "window lengths " + std::to_string(a.l()) + " and " +
                                           std::to_string(b.l()) + " differ");
  }
  require_valid(a, "first colouring");
  require_valid(b, "second colouring");
  auto words = kernels::product_parallel(a, b);
  return Colouring(a.q() * b.q(), std::lcm(a.k(), b.k()), a.l(), std::move(words));
}

std::vector<RotationIndexedWord> rotation_set(const Colouring& c) {
  std::vector<RotationIndexedWord> out;
  out.reserve(c.size() * c.k());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t r = 0; r < c.k(); ++r) {
      out.push_back({c.words()[i].rotate(static_cast<std::int64_t>(r)), i, r});
    }
  }
  return out;
}

std::vector<kernels::RotationTuple> interleave_rotations(std::size_t k, std::size_t t) {
  if (t == 0 || k % t != 0) {
    throw Error(Errc::kNotADivisor, std::to_string(t) + " does not divide " + std::to_string(k));
  }
  // k^{t-1} / t tuples.
  const auto free_part = numeric::checked_pow(k, t - 1);
  if (!free_part || *free_part / t > kMaxRotationTuples) {
    throw Error(Errc::kTooLarge, "k^(t-1)/t rotation tuples exceed 2^24");
  }
  std::vector<kernels::RotationTuple> out;
  kernels::RotationTuple tuple(t, 0);
  if (t == 1) {
    out.push_back(tuple);
    return out;
  }
  // Odometer over psi_2 .. psi_{t-1}; psi_t takes every value that closes
  // the sum modulo t.
  while (true) {
    std::size_t partial = 0;
    for (std::size_t i = 1; i + 1 < t; ++i) partial += tuple[i];
    const std::size_t first_last = (t - partial % t) % t;
    for (std::size_t last = first_last; last < k; last += t) {
      tuple[t - 1] = last;
      out.push_back(tuple);
    }
    std::size_t i = t - 1;
    while (i-- > 1) {
      if (++tuple[i] < k) break;
      tuple[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

Colouring interleave(const Colouring& c, std::size_t t) {
  const auto rotations = interleave_rotations(c.k(), t);
  require_valid(c, "input colouring");
  auto words = kernels::interleave_parallel(c.words(), t, rotations);
  return Colouring(c.q(), t * c.k(), t * c.l(), std::move(words));
}

Colouring interleave_pair_odd(const Colouring& c) {
  require_valid(c, "input colouring");
  std::vector<kernels::RotationTuple> rotations;
  // psi counts right rotations of the second word here. Read as left
  // rotations, psi = 0 and psi = 1 give rotations of one another once k >= 5.
  for (std::size_t psi = 0; 2 * psi + 1 < c.k(); ++psi) rotations.push_back({0, (c.k() - psi) % c.k()});
  auto words = kernels::interleave_parallel(c.words(), 2, rotations);
  return Colouring(c.q(), 2 * c.k(), 2 * c.l(), std::move(words));
}

std::vector<std::vector<std::size_t>> NecklaceGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

NecklaceGraph necklace_graph(std::uint32_t q, std::size_t l, bool aperiodic_only) {
  if (l == 0) throw Error(Errc::kInvalidInput, "l must be positive");
  NecklaceGraph g;
  g.q = q;
  g.l = l;
  g.aperiodic_only = aperiodic_only;
  for (auto& w : enumerate_necklaces(q, l)) {
    if (!aperiodic_only || w.is_aperiodic()) g.vertices.push_back(std::move(w));
  }
  std::unordered_map<std::string, std::vector<std::size_t>> by_factor;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    std::set<std::string> mine;
    for (std::size_t r = 0; r < l; ++r) mine.insert(window_key(g.vertices[v], r, l - 1));
    for (const auto& f : mine) by_factor[f].push_back(v);
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [factor, members] : by_factor) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace(members[i], members[j]);
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::optional<Carving> carve_graph(const std::vector<std::vector<std::size_t>>& adj,
                                  std::size_t t) {
  if (t == 0 || adj.size() % t != 0) return std::nullopt;
  constexpr std::size_t kMaxRoots = 64;
  const std::size_t roots = std::min(kMaxRoots, adj.size());
  for (std::size_t root = 0; root < roots; ++root) {
    for (bool descending : {false, true}) {
      auto forest = dfs_forest(adj, root, descending);
      auto comp = carve(forest, t);
      if (comp.empty()) continue;
      return Carving{std::move(forest.parent), std::move(forest.preorder), std::move(comp)};
    }
  }
  return std::nullopt;
}

Colouring concat_partition(std::uint32_t q, std::size_t l, std::size_t t) {
  if (!numeric::is_prime(l)) throw Error(Errc::kNotPrime, "l = " + std::to_string(l) + " is not prime");
  const std::uint64_t total = numeric::pow_or_throw(q, l);
  const std::uint64_t cycles = (total - q) / l;
  if (t == 0 || cycles % t != 0) {
    throw Error(Errc::kNotADivisor, std::to_string(t) + " does not divide " + std::to_string(cycles));
  }
  const auto g = necklace_graph(q, l, true);
  if (t == 1) return Colouring(q, l, l, g.vertices);

  const auto carving = carve_graph(g.adjacency(), t);
  if (carving) {
    const std::size_t count = cycles / t;
    std::vector<std::vector<std::size_t>> members(count);
    for (std::size_t v : carving->preorder) members[carving->component[v]].push_back(v);
    std::vector<CyclicWord> words;
    words.reserve(count);
    for (const auto& m : members) words.push_back(splice_component(g, carving->parent, m));
    Colouring out(q, t * l, l, std::move(words));
    if (!is_valid(out).valid) throw Error(Errc::kCarvingFailed, "spliced colouring is not valid");
    return out;
  }
  throw Error(Errc::kCarvingFailed, "no spanning forest of N'(" + std::to_string(q) + "," +
                                        std::to_string(l) + ") with " + std::to_string(t) +
                                        "-vertex components found");
}

std::vector<CyclicWord> closed_walks(std::uint32_t q, std::size_t k, std::size_t l) {
  if (l == 0 || k % l != 0) {
    throw Error(Errc::kNotADivisor, std::to_string(l) + " does not divide " + std::to_string(k));
  }
  std::vector<CyclicWord> out;
  for (const auto& neck : enumerate_necklaces(q, l)) {
    const std::size_t period = neck.necklace_size();
    std::vector<Symbol> w;
    w.reserve(k);
    for (std::size_t i = 0; i < k; ++i) w.push_back(neck[i % period]);
    out.emplace_back(std::move(w));
  }
  return out;
}

}  // namespace ebug
