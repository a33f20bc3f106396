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

#include "ebug/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <utility>

#include "ebug/counting.hpp"
#include "ebug/numeric.hpp"

namespace ebug {
namespace {

using Clock = std::chrono::steady_clock;
using Cycle = std::vector<std::uint32_t>;

constexpr std::uint64_t kMaxSearchVertices = std::uint64_t{1} << 20;
constexpr std::uint64_t kMaxEnumerateVertices = 16;
constexpr std::uint64_t kClockEvery = 4096;

struct Shared {
  std::atomic<std::size_t> best{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> nodes{0};
  std::mutex witness_mutex;
  std::vector<Cycle> witness;
  bool has_deadline = false;
  Clock::time_point deadline;
};

class Searcher {
 public:
  Searcher(std::uint32_t q, std::size_t k, std::size_t l, std::uint64_t upper, Shared* shared)
      : q_(q), k_(k), l_(l), upper_(upper), shared_(shared) {
    pow_.assign(l + 1, 1);
    for (std::size_t i = 1; i <= l; ++i) pow_[i] = pow_[i - 1] * q;
    vertices_ = pow_[l];
    state_.assign(vertices_, kFree);
    avail_ = vertices_;
  }

  ~Searcher() { shared_->nodes += local_nodes_; }

  // Every k-cycle through v over free vertices, as vertex lists starting at v.
  std::vector<Cycle> cycles_through(std::uint32_t v) {
    std::vector<Cycle> out;
    for_each_cycle(v, [&](const Cycle& c) { out.push_back(c); });
    return out;
  }

  void search(std::size_t from) {
    if (!tick()) return;
    record();
    if (shared_->best.load() >= upper_) {
      shared_->stop = true;
      return;
    }
    if (chosen_.size() + avail_ / k_ <= shared_->best.load()) return;
    std::size_t v = from;
    while (v < vertices_ && state_[v] != kFree) ++v;
    if (v == vertices_) return;
    const auto vertex = static_cast<std::uint32_t>(v);
    for_each_cycle(vertex, [&](const Cycle& c) { take(c, v + 1); });
    skip(vertex, v + 1);
  }

  // Runs the subtree under one choice for the first vertex. The cycle's
  // vertices may still be marked as on the enumeration path; that mark is
  // restored afterwards.
  void take(const Cycle& cycle, std::size_t from) {
    const std::uint8_t before = state_[cycle.front()];
    for (auto u : cycle) state_[u] = kUsed;
    avail_ -= cycle.size();
    chosen_.push_back(cycle);
    search(from);
    chosen_.pop_back();
    avail_ += cycle.size();
    for (auto u : cycle) state_[u] = before;
  }

  void skip(std::uint32_t v, std::size_t from) {
    state_[v] = kSkipped;
    --avail_;
    search(from);
    ++avail_;
    state_[v] = kFree;
  }

 private:
  static constexpr std::uint8_t kFree = 0;
  static constexpr std::uint8_t kUsed = 1;
  static constexpr std::uint8_t kSkipped = 2;
  static constexpr std::uint8_t kOnPath = 3;

  bool tick() {
    if (shared_->stop.load(std::memory_order_relaxed)) return false;
    if (++local_nodes_ % kClockEvery == 0 && shared_->has_deadline &&
        Clock::now() > shared_->deadline) {
      shared_->timed_out = true;
      shared_->stop = true;
      return false;
    }
    return true;
  }

  void record() {
    std::size_t best = shared_->best.load();
    if (chosen_.size() <= best) return;
    std::lock_guard lock(shared_->witness_mutex);
    best = shared_->best.load();
    if (chosen_.size() <= best) return;
    shared_->witness = chosen_;
    shared_->best = chosen_.size();
  }

  template <typename Fn>
  void for_each_cycle(std::uint32_t v, Fn&& found) {
    // Local, since the callback may start a nested enumeration.
    Cycle path{v};
    state_[v] = kOnPath;
    extend(v, v, k_, path, found);
    state_[v] = kFree;
  }

  // At u with r steps left before returning to v. Once r <= l the remaining
  // symbols are forced by v.
  template <typename Fn>
  void extend(std::uint32_t v, std::uint64_t u, std::size_t r, Cycle& path, Fn& found) {
    if (!tick()) return;
    if (r <= l_) {
      if (u % pow_[l_ - r] != v / pow_[r]) return;
      const std::size_t before = path.size();
      bool ok = true;
      std::uint64_t w = u;
      for (std::size_t s = r; s >= 2; --s) {
        w = (w * q_ + (v / pow_[s - 1]) % q_) % vertices_;
        if (state_[w] != kFree) {
          ok = false;
          break;
        }
        state_[w] = kOnPath;
        path.push_back(static_cast<std::uint32_t>(w));
      }
      if (ok) found(path);
      for (std::size_t i = before; i < path.size(); ++i) state_[path[i]] = kFree;
      path.resize(before);
      return;
    }
    const std::uint64_t base = (u * q_) % vertices_;
    for (std::uint32_t a = 0; a < q_; ++a) {
      const std::uint64_t w = base + a;
      if (state_[w] != kFree) continue;
      state_[w] = kOnPath;
      path.push_back(static_cast<std::uint32_t>(w));
      extend(v, w, r - 1, path, found);
      path.pop_back();
      state_[w] = kFree;
      if (shared_->stop.load(std::memory_order_relaxed)) return;
    }
  }

  std::uint32_t q_;
  std::size_t k_;
  std::size_t l_;
  std::uint64_t upper_;
  Shared* shared_;
  std::vector<std::uint64_t> pow_;
  std::uint64_t vertices_ = 0;
  std::vector<std::uint8_t> state_;
  std::size_t avail_ = 0;
  std::vector<Cycle> chosen_;
  std::uint64_t local_nodes_ = 0;
};

CyclicWord cycle_word(const Cycle& cycle, std::uint64_t lead) {
  std::vector<Symbol> w;
  w.reserve(cycle.size());
  for (auto v : cycle) w.push_back(static_cast<Symbol>(v / lead));
  return CyclicWord(std::move(w));
}

std::uint64_t checked_vertices(std::uint32_t q, std::size_t l, std::uint64_t cap) {
  const auto total = numeric::checked_pow(q, l);
  if (!total || *total > cap) {
    throw Error(Errc::kTooLarge, "q^l = " + std::to_string(q) + "^" + std::to_string(l) +
                                     " exceeds " + std::to_string(cap));
  }
  return *total;
}

// Hamiltonian cycles of dB(q, l) from 0^l; `found` sees the vertex order.
template <typename Fn>
void for_each_debruijn(std::uint32_t q, std::size_t l, Fn&& found) {
  if (q == 0 || l == 0) throw Error(Errc::kInvalidInput, "need q >= 1, l >= 1");
  const std::uint64_t n = checked_vertices(q, l, kMaxEnumerateVertices);
  std::vector<bool> seen(n, false);
  Cycle path{0};
  seen[0] = true;
  auto go = [&](auto&& self, std::uint64_t u) -> void {
    if (path.size() == n) {
      if ((u * q) % n == 0) found(path);
      return;
    }
    for (std::uint32_t a = 0; a < q; ++a) {
      const std::uint64_t w = (u * q + a) % n;
      if (seen[w]) continue;
      seen[w] = true;
      path.push_back(static_cast<std::uint32_t>(w));
      self(self, w);
      path.pop_back();
      seen[w] = false;
    }
  };
  go(go, 0);
}

}  // namespace

BudgetExceeded::BudgetExceeded(SearchResult result)
    : Error(Errc::kBudgetExceeded, "search stopped at " + std::to_string(result.best_count) +
                                       " cycles after " +
                                       std::to_string(result.nodes_expanded) + " nodes"),
      result_(std::move(result)) {}

SearchResult max_k_cycles(std::uint32_t q, std::size_t k, std::size_t l,
                          const SearchOptions& options) {
  if (q < 1 || q > kMaxAlphabet || l < 1) throw Error(Errc::kInvalidInput, "need 1 <= q <= 256, l >= 1");
  if (k < l) throw Error(Errc::kInvalidInput, "k must be at least l");
  const std::uint64_t n = checked_vertices(q, l, kMaxSearchVertices);
  const std::uint64_t upper = upper_bound(q, k, l);

  const auto start = Clock::now();
  Shared shared;
  if (options.budget > Seconds::zero()) {
    shared.has_deadline = true;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(options.budget);
  }
  if (upper > 0) {
    if (options.threads <= 1) {
      Searcher(q, k, l, upper, &shared).search(0);
    } else {
      std::vector<Cycle> first;
      {
        Searcher probe(q, k, l, upper, &shared);
        first = probe.cycles_through(0);
      }
      const auto branches = static_cast<std::int64_t>(first.size()) + 1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(options.threads))
      for (std::int64_t b = 0; b < branches; ++b) {
        Searcher worker(q, k, l, upper, &shared);
        if (b < static_cast<std::int64_t>(first.size())) {
          worker.take(first[static_cast<std::size_t>(b)], 1);
        } else {
          worker.skip(0, 1);
        }
      }
    }
  }

  SearchResult result;
  result.best_count = shared.best.load();
  std::vector<CyclicWord> words;
  for (const auto& c : shared.witness) words.push_back(cycle_word(c, n / q));
  result.witness = Colouring(q, k, l, std::move(words));
  result.nodes_expanded = shared.nodes.load();
  result.elapsed = Clock::now() - start;
  result.exhausted = result.best_count == upper || !shared.timed_out.load();
  if (!result.exhausted) throw BudgetExceeded(std::move(result));
  return result;
}

std::uint64_t enumerate_debruijn(std::uint32_t q, std::size_t l) {
  std::uint64_t count = 0;
  for_each_debruijn(q, l, [&](const Cycle&) { ++count; });
  return count;
}

std::vector<CyclicWord> enumerate_debruijn_words(std::uint32_t q, std::size_t l) {
  std::vector<CyclicWord> out;
  const std::uint64_t lead = numeric::pow_or_throw(q, l - 1);
  for_each_debruijn(q, l, [&](const Cycle& c) { out.push_back(cycle_word(c, lead)); });
  return out;
}

bool ConjectureReport::all_optimal() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.optimal(); });
}

std::vector<ConjectureCase> ConjectureReport::failures() const {
  std::vector<ConjectureCase> out;
  for (const auto& c : cases) {
    if (!c.optimal()) out.push_back(c);
  }
  return out;
}

ConjectureReport verify_conjecture(std::uint64_t max_size, const SearchOptions& per_case) {
  ConjectureReport report;
  for (std::uint64_t q = 2; q <= max_size && q <= kMaxAlphabet; ++q) {
    std::uint64_t total = q;
    for (std::size_t l = 1; total <= max_size; ++l) {
      for (std::uint64_t k : numeric::divisors(total)) {
        if (k <= l || k >= total) continue;
        ConjectureCase c{static_cast<std::uint32_t>(q), static_cast<std::size_t>(k), l,
                         upper_bound(q, k, l)};
        try {
          const auto r = max_k_cycles(c.q, c.k, c.l, per_case);
          c.best = r.best_count;
          c.exhausted = r.exhausted;
          c.elapsed = r.elapsed;
        } catch (const BudgetExceeded& e) {
          c.best = e.result().best_count;
          c.budget_exceeded = true;
          c.elapsed = e.result().elapsed;
        }
        report.cases.push_back(c);
      }
      const auto next = numeric::checked_mul(total, q);
      if (!next) break;
      total = *next;
    }
  }
  return report;
}

}  // namespace ebug
