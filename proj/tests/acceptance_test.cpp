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

// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ebug/counting.hpp"
#include "ebug/decoder.hpp"
#include "ebug/error.hpp"
#include "ebug/field.hpp"
#include "ebug/lfsr.hpp"
#include "ebug/necklace.hpp"
#include "ebug/oracle.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace {

using namespace ebug;
namespace t = ebug::testing;
using Clock = std::chrono::steady_clock;

// Failure details for one criterion. Empty means pass.
class Notes {
 public:
  void fail(const std::string& what) { failures_.push_back(what); }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  // Runs fn, failing if it throws or exceeds the limit.
  template <typename Fn>
  void timed(const std::string& what, double limit_s, Fn&& fn) {
    const auto start = Clock::now();
    try {
      fn();
    } catch (const std::exception& e) {
      fail(what + ": threw " + e.what());
      return;
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    if (s >= limit_s) fail(what + ": took " + std::to_string(s) + " s");
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) s += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 5) s += "; ...";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

std::string label(std::uint64_t q, std::uint64_t l) {
  return "(" + std::to_string(q) + "," + std::to_string(l) + ")";
}

template <typename Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kMalformed;
}

// Colourings built by criteria 1 to 6, replayed through the decoder.
std::vector<Colouring> generated;

void criterion1(Notes& n) {
  n.timed("translate (3,4)", 0.1, [&] {
    const auto c = lfsr_translate(3, 4, std::vector<Symbol>{2, 1, 0});
    n.expect(t::canonical_set(t::strings(c)) ==
                 t::canonical_set({"100202122102220010121120111", "211010200210001121202201222",
                                   "022121011021112202010012000"}),
             "words differ from the published three");
    generated.push_back(c);
  });
}

void criterion2(Notes& n) {
  n.timed("interleave t=2", 1.0, [&] {
    const auto out = interleave(t::colouring(4, 3, t::quaternary_eight()), 2);
    const auto got = t::strings(out);
    std::vector<std::string> table;
    for (const auto& row : t::load_interleave_table()) table.insert(table.end(), row.words.begin(), row.words.end());
    n.expect(table.size() == 256, "table fixture does not have 256 words");
    n.expect(t::canonical_set(got) == t::canonical_set(table), "set differs from the published table");
    n.expect(got.size() >= 8 && std::vector<std::string>(got.begin() + 4, got.begin() + 8) ==
                                    std::vector<std::string>{"0100003201323333", "0002013203333130",
                                                             "0102033301303032", "0303013000323132"},
             "(0,1) block order");
    n.expect(out.q() == 4 && out.k() == 16 && out.l() == 6, "shape");
    n.expect(is_optimal_partition(out), "not an optimal partition of dB(4,6)");
    generated.push_back(out);
  });
}

void criterion3(Notes& n) {
  n.timed("pipeline", 1.0, [&] {
    const auto bugs = lfsr_translate(2, 5);
    n.expect(bugs.size() == 2 && bugs.k() == 16 && is_optimal_partition(bugs), "translate(2,5)");
    const auto p = product(bugs, bugs);
    n.expect(p.size() == 64 && p.q() == 4 && p.k() == 16 && p.l() == 5, "product shape");
    n.expect(is_valid(p).valid && is_optimal_partition(p), "product not optimal");
    generated.push_back(bugs);
    generated.push_back(p);
  });
}

void criterion4(Notes& n) {
  const std::vector<std::pair<std::uint32_t, unsigned>> cases = {
      {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {7, 2}, {8, 2}, {9, 2}};
  for (auto [q, l] : cases) {
    n.timed(label(q, l), 1.0, [&] {
      const auto c = lfsr_translate(q, l);
      n.expect(c.size() == q && c.k() == t::ipow(q, l - 1) && is_optimal_partition(c), label(q, l));
      generated.push_back(c);
    });
  }
  n.timed("(2,2)", 1.0, [&] {
    n.expect(code_of([] { lfsr_translate(2, 2); }) == Errc::kDegenerateField, "(2,2) not DegenerateField");
  });
}

void criterion5(Notes& n) {
  const std::vector<std::tuple<std::uint32_t, unsigned, std::uint64_t, std::size_t>> cases = {
      {2, 4, 5, 3}, {2, 6, 9, 7}, {3, 3, 13, 2}};
  for (auto [q, l, k, count] : cases) {
    const auto name = "(" + std::to_string(q) + "," + std::to_string(l) + "," + std::to_string(k) + ")";
    n.timed(name, 1.0, [&] {
      const auto c = nonprimitive_cycles(q, l, k);
      n.expect(c.size() == count && c.k() == k, name + " shape");
      n.expect(is_valid(c).valid, name + " invalid");
      n.expect(c.size() * c.k() == t::ipow(q, l) - 1, name + " coverage");
      generated.push_back(c);
    });
  }
}

void criterion6(Notes& n) {
  for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned l = 1; l <= 3 && t::ipow(q, l) <= 1000; ++l) {
      const std::uint64_t m = (t::ipow(q, l) - 1) / (q - 1);
      n.timed(label(q, l), 1.0, [&] {
        const auto c = lfsr_split(q, l, m);
        n.expect(c.size() == q - 1 && c.k() == m && is_valid(c).valid, label(q, l));
        generated.push_back(c);
      });
    }
  }
}

void criterion7(Notes& n) {
  n.timed("counting", 5.0, [&] {
    for (std::uint64_t q = 1; q <= 5; ++q) {
      for (std::uint64_t l = 1; l <= 10; ++l) {
        std::uint64_t sum = 0;
        for (auto d : numeric::divisors(l)) sum += d * moreau(q, d);
        n.expect(sum == t::ipow(q, l), "necklace identity " + label(q, l));
      }
    }
    n.expect(debruijn_count(2, 3) == 2 && enumerate_debruijn(2, 3) == 2, "de Bruijn (2,3)");
    n.expect(debruijn_count(2, 4) == 16 && enumerate_debruijn(2, 4) == 16, "de Bruijn (2,4)");
  });
}

void criterion8(Notes& n) {
  const auto report = verify_conjecture(32, {Seconds(60), 1});
  n.expect(!report.cases.empty(), "no cases");
  for (const auto& c : report.failures()) {
    n.fail("q=" + std::to_string(c.q) + " k=" + std::to_string(c.k) + " l=" + std::to_string(c.l) +
           " best=" + std::to_string(c.best));
  }
}

void criterion9(Notes& n) {
  for (std::uint32_t q = 2; q <= 36; ++q) {
    if (!is_prime_power(q)) continue;
    for (unsigned l = 1; t::ipow(q, l) <= 4096; ++l) {
      const ExtensionField f(BaseField(q), l);
      const auto& b = f.base();
      const auto name = label(q, l);

      auto x = f.fib_step(f.one());
      std::uint64_t period = 1;
      while (x != f.one() && period <= f.group_order()) x = f.fib_step(x), ++period;
      n.expect(period == f.group_order(), name + " period");

      const auto c = f.change_of_basis_matrix();
      const auto m = f.companion_matrix();
      for (unsigned i = 0; i < l; ++i) {
        n.expect(c[0][i] == (i == 0 ? 1 : 0), name + " first row");
        for (unsigned j = 0; j < l; ++j) n.expect(c[i][j] == c[j][i], name + " C symmetric");
      }
      n.expect(mat_mul(b, c, m) == mat_mul(b, mat_transpose(m), c), name + " CM = M^T C");

      // Every product, via the power basis and longhand polynomial arithmetic.
      const auto cinv = mat_inverse(b, c);
      if (!cinv) {
        n.fail(name + " C singular");
        continue;
      }
      std::vector<FieldElement> elems(f.order());
      std::vector<std::vector<Symbol>> power(f.order());
      for (ElementIndex i = 0; i < f.order(); ++i) {
        elems[i] = f.decode(i);
        power[i] = mat_vec(b, *cinv, elems[i].coords);
      }
      bool all = true;
      for (ElementIndex i = 0; i < f.order() && all; ++i) {
        for (ElementIndex j = i; j < f.order() && all; ++j) {
          const auto expect = t::slow_polymul(b, power[i], power[j], f.feedback());
          all = mat_vec(b, c, expect) == f.mul(elems[i], elems[j]).coords;
        }
      }
      n.expect(all, name + " table product");
    }
  }
}

void criterion10(Notes& n) {
  for (auto [q, l] : {std::pair<std::uint32_t, std::size_t>{2, 3}, {2, 4}, {3, 2}}) {
    const auto all = enumerate_debruijn_words(q, l);
    std::string least;
    for (const auto& w : all) {
      const auto s = t::min_rotation(w.to_string());
      if (least.empty() || s < least) least = s;
    }
    n.expect(!all.empty() && t::min_rotation(fkm_debruijn(q, l).to_string()) == least, "minimum " + label(q, l));
  }
  n.expect(fkm_debruijn(2, 3).to_string() == "00010111", "fkm(2,3)");
}

void criterion11(Notes& n) {
  n.expect(generated.size() >= 20, "colourings from earlier criteria missing");
  std::size_t unknown_checked = 0;
  for (const auto& c : generated) {
    const auto table = DecoderTable::build(c);
    const auto name = "(q=" + std::to_string(c.q()) + ",k=" + std::to_string(c.k()) + ",l=" + std::to_string(c.l()) + ")";
    bool all = true;
    for (std::size_t i = 0; i < c.size() && all; ++i) {
      for (std::size_t r = 0; r < c.k() && all; ++r) {
        const auto w = c.words()[i].window(r, c.l());
        all = table.decode(std::span<const Symbol>(w)) == Sighting{i, r};
      }
    }
    n.expect(all, name + " round trip");
    // The all-zero window is missing from every colouring that avoids the
    // zero vertex.
    if (c.size() * c.k() < t::ipow(c.q(), c.l())) {
      const std::vector<Symbol> zero(c.l(), 0);
      n.expect(code_of([&] { table.decode(std::span<const Symbol>(zero)); }) == Errc::kNotFound,
               name + " unknown window");
      ++unknown_checked;
    }
    const std::vector<Symbol> longer(c.l() + 1, 0);
    n.expect(code_of([&] { table.decode(std::span<const Symbol>(longer)); }) == Errc::kNotFound,
             name + " wrong length");
  }
  n.expect(unknown_checked > 0, "no partial colouring to probe");
}

void criterion12(Notes& n) {
  std::mt19937_64 rng(20260419);
  n.expect(t::check_rotation_identity(rng, 400) == 0, "rotation identity");
  n.expect(t::check_validity_oracle(rng, 400) == 0, "validity oracle");
  n.expect(t::check_optimality_preservation(rng, 200) == 0, "optimality preservation");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Notes&)>>> criteria = {
      {"translation reproduces the (3,4) example", criterion1},
      {"interleaving table reproduction", criterion2},
      {"E(2,16,5)=2 to E(4,16,5)=64 pipeline", criterion3},
      {"translation family", criterion4},
      {"non-primitive family", criterion5},
      {"splitting family", criterion6},
      {"counting identities", criterion7},
      {"conjecture sweep to q^l <= 32", criterion8},
      {"field properties to q^l <= 4096", criterion9},
      {"FKM minimality", criterion10},
      {"decoder round trip", criterion11},
      {"1000 randomised property checks", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Notes notes;
    const auto start = Clock::now();
    try {
      criteria[i].second(notes);
    } catch (const std::exception& e) {
      notes.fail(std::string("threw ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.3f s)%s%s\n", notes.ok() ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), s, notes.ok() ? "" : " -- ", notes.summary().c_str());
    std::fflush(stdout);
    failed += notes.ok() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
