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

#ifndef EBUG_NECKLACE_HPP_
#define EBUG_NECKLACE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ebug/kernels.hpp"
#include "ebug/words.hpp"

// Constructions on necklaces: Lyndon/FKM generation, products and
// interleavings of colourings, necklace adjacency and concatenation, and
// the closed-walk identification colouring.
namespace ebug {

// All q-ary Lyndon words of length exactly n, lexicographic.
std::vector<CyclicWord> lyndon_words(std::uint32_t q, std::size_t n);

// Lyndon words whose length divides l, concatenated in lexicographic order:
// the lexicographically least de Bruijn sequence. Any q >= 2.
CyclicWord fkm_debruijn(std::uint32_t q, std::size_t l);

// Alphabet q1*q2 with (x, y) -> x*q2 + y, length lcm(k1, k2), and
// gcd(k1, k2) merged words per input pair, the second word rotated left by
// j = 0 .. gcd-1. kWindowMismatch when the window lengths differ,
// kInvalidInput when either input is not valid.
Colouring product(const Colouring& a, const Colouring& b);

// A word of the rotation set W: the source necklace's representative rotated
// left by `rotation`.
struct RotationIndexedWord {
  CyclicWord word;
  std::size_t source_index = 0;
  std::size_t rotation = 0;
};

// Every rotation of every representative, grouped by source.
std::vector<RotationIndexedWord> rotation_set(const Colouring& c);

// Admissible rotation tuples for interleave: first entry 0, sum = 0 mod t,
// lexicographic.
std::vector<kernels::RotationTuple> interleave_rotations(std::size_t k, std::size_t t);

// Words I(w_1, ..., w_t) over t-tuples from W with psi(w_1) = 0 and
// sum psi = 0 mod t. Output has n^t k^{t-1} / t words of length t*k and is
// (t*l)-valid. Ordered by source tuple, then rotation tuple.
Colouring interleave(const Colouring& c, std::size_t t);

// Pairs with psi(w_1) = 0 and w_2 rotated right by psi < (k-1)/2:
// floor(k/2) n^2 words of length 2k, (2l)-valid for any k. Ordered by source
// pair, then psi ascending.
Colouring interleave_pair_odd(const Colouring& c);

struct NecklaceGraph {
  std::uint32_t q = 0;
  std::size_t l = 0;
  bool aperiodic_only = false;
  // Canonical representatives, ascending.
  std::vector<CyclicWord> vertices;
  // (u, v) with u < v, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

// N(q, l), or N'(q, l) restricted to the necklaces of size l. Two necklaces
// are adjacent when they share an (l-1)-window. Needs q^l <= 2^20.
NecklaceGraph necklace_graph(std::uint32_t q, std::size_t l, bool aperiodic_only);

// Spanning forest of a graph cut into connected pieces of exactly t
// vertices. parent[v] == v for roots; component ids follow preorder.
struct Carving {
  std::vector<std::size_t> parent;
  std::vector<std::size_t> preorder;
  std::vector<std::size_t> component;
};

// Depth-first forests from up to 64 successive roots, each scanned with
// ascending then descending neighbour order, carved leaf-first: a subtree is
// cut off as soon as it holds t vertices. nullopt when no attempt works.
std::optional<Carving> carve_graph(const std::vector<std::vector<std::size_t>>& adj,
                                   std::size_t t);

// Carve N'(q, l) into subtrees of t necklaces each and splice each subtree's
// l-cycles into one t*l-cycle at shared (l-1)-windows. Heuristic: depth-first
// spanning forests from successive roots, cut leaf-first. kCarvingFailed
// when no attempt yields exact t-vertex components.
Colouring concat_partition(std::uint32_t q, std::size_t l, std::size_t t);

// One closed k-walk per length-l necklace: its period repeated to length k.
// Windows repeat inside a word but never across words.
std::vector<CyclicWord> closed_walks(std::uint32_t q, std::size_t k, std::size_t l);

}  // namespace ebug

#endif  // EBUG_NECKLACE_HPP_
