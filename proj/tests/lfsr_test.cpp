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

#include "ebug/lfsr.hpp"

#include <gtest/gtest.h>

#include <set>

#include "ebug/error.hpp"
#include "oracles.hpp"

namespace ebug {
namespace {

namespace t = testing;

template <typename Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kMalformed;
}

const std::vector<Symbol> kTernary{2, 1, 0};

TEST(LfsrDeBruijn, SmallCases) {
  // State 1 then the spliced 0.
  EXPECT_EQ(lfsr_debruijn(2, 1).to_string(), "10");
  EXPECT_EQ(lfsr_debruijn(2, 1).canonical().to_string(), "01");
  // Published state stream with 0 spliced in after state 1.
  EXPECT_EQ(lfsr_debruijn(3, 3, kTernary).to_string(), "100020212210222001012112011");
}

TEST(LfsrDeBruijn, EveryWindowOnce) {
  for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned l = 1; t::ipow(q, l) <= 4096; ++l) {
      const auto w = lfsr_debruijn(q, l);
      ASSERT_EQ(w.size(), t::ipow(q, l));
      const Colouring c(q, w.size(), l, {w});
      EXPECT_TRUE(is_optimal_partition(c)) << q << "," << l;
      // Contains 1 0^l.
      std::string needle = "1" + std::string(l, '0');
      const auto s = w.to_string();
      EXPECT_NE((s + s).find(needle), std::string::npos);
    }
  }
}

TEST(LfsrDeBruijn, Errors) {
  EXPECT_EQ(code_of([] { lfsr_debruijn(6, 2); }), Errc::kNotPrimePower);
  EXPECT_EQ(code_of([] { lfsr_debruijn(2, 3, std::vector<Symbol>{1, 0, 0}); }), Errc::kNotPrimitive);
}

TEST(LfsrSplit, Examples) {
  const auto a = lfsr_split(3, 2, 4);
  EXPECT_EQ(a.size(), 2U);
  EXPECT_TRUE(t::valid_quadratic(a));
  const auto b = lfsr_split(5, 2, 6);
  EXPECT_EQ(b.size(), 4U);
  EXPECT_TRUE(is_valid(b).valid);
  const auto c = lfsr_split(2, 4, 9);
  EXPECT_EQ(c.size(), 1U);
}

TEST(LfsrSplit, ValidUpToTheBound) {
  for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned l = 1; l <= 3 && t::ipow(q, l) <= 1000; ++l) {
      const std::uint64_t m = (t::ipow(q, l) - 1) / (q - 1);
      for (std::uint64_t k = l; k <= m; ++k) {
        const auto c = lfsr_split(q, l, k);
        EXPECT_EQ(c.size(), q - 1);
        EXPECT_TRUE(is_valid(c).valid) << q << "," << l << "," << k;
      }
    }
  }
}

TEST(LfsrSplit, Errors) {
  EXPECT_EQ(code_of([] { lfsr_split(3, 2, 5); }), Errc::kKTooLarge);
  EXPECT_EQ(code_of([] { lfsr_split(3, 3, 2); }), Errc::kInvalidInput);
  EXPECT_EQ(code_of([] { lfsr_split(10, 2, 3); }), Errc::kNotPrimePower);
}

TEST(LfsrSplit, BinaryFullPeriodIsTheLfsrRun) {
  // alpha^k = 1 here; the single word is the whole LFSR cycle from 1.
  const auto c = lfsr_split(2, 4, 15);
  ASSERT_EQ(c.size(), 1U);
  EXPECT_TRUE(is_valid(c).valid);
  EXPECT_EQ(is_valid(c).window_count, 15U);
}

TEST(LfsrTranslate, PublishedExample) {
  const auto c = lfsr_translate(3, 4, kTernary);
  EXPECT_EQ(t::strings(c), (std::vector<std::string>{"100202122102220010121120111",
                                                     "211010200210001121202201222",
                                                     "022121011021112202010012000"}));
  EXPECT_TRUE(is_optimal_partition(c));
}

TEST(LfsrTranslate, OptimalFamily) {
  for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9}) {
    for (unsigned l = 1; t::ipow(q, l) <= (1U << 14); ++l) {
      if (q == 2 && l == 2) continue;
      const auto c = lfsr_translate(q, l);
      EXPECT_EQ(c.size(), q);
      EXPECT_EQ(c.k(), t::ipow(q, l - 1));
      EXPECT_TRUE(is_optimal_partition(c)) << q << "," << l;
    }
  }
  EXPECT_EQ(t::strings(lfsr_translate(3, 1)), (std::vector<std::string>{"0", "1", "2"}));
}

TEST(LfsrTranslate, DegenerateBinaryPair) {
  EXPECT_EQ(code_of([] { lfsr_translate(2, 2); }), Errc::kDegenerateField);
}

TEST(LfsrTranslate, FixedPoints) {
  for (std::uint32_t q : {3, 4, 5}) {
    const TranslationSystem sys(ExtensionField(BaseField(q), 2));
    std::set<std::vector<Symbol>> constants;
    for (Symbol e = 0; e < q; ++e) {
      const auto& phi = sys.fixed_point(e);
      EXPECT_EQ(sys.xi(e, phi), phi);
      // Fixed points are constant vertices, one per symbol.
      EXPECT_EQ(phi.coords[0], phi.coords[1]);
      constants.insert(phi.coords);
      // Out-edges of b are exactly the xi_e(b).
      const auto b = sys.field().antilog(3);
      const auto next = sys.xi(e, b);
      EXPECT_EQ(next.coords[0], b.coords[1]);
    }
    EXPECT_EQ(constants.size(), q);
  }
}

TEST(LfsrTranslate, EveryEdgeOnce) {
  // Words of length q^{l-1} read as circuits of dB(q, l-1): each l-window
  // is an edge, and all q^l edges appear exactly once.
  const auto c = lfsr_translate(4, 3);
  std::set<std::string> edges;
  std::size_t total = 0;
  for (const auto& w : t::strings(c)) {
    for (std::size_t r = 0; r < w.size(); ++r) {
      edges.insert(t::cyc_window(w, r, 3));
      ++total;
    }
  }
  EXPECT_EQ(total, 64U);
  EXPECT_EQ(edges.size(), 64U);
}

TEST(LfsrTranslate, Deterministic) {
  EXPECT_EQ(t::strings(lfsr_translate(5, 3)), t::strings(lfsr_translate(5, 3)));
}

TEST(Nonprimitive, Examples) {
  struct Case {
    std::uint32_t q;
    unsigned l;
    std::uint64_t k;
    std::size_t n;
  };
  for (auto [q, l, k, n] : {Case{2, 4, 5, 3}, Case{2, 6, 9, 7}, Case{3, 3, 13, 2}, Case{3, 2, 8, 1},
                            Case{2, 6, 21, 3}, Case{4, 3, 9, 7}}) {
    const auto c = nonprimitive_cycles(q, l, k);
    EXPECT_EQ(c.size(), n);
    EXPECT_EQ(c.k(), k);
    const auto r = is_valid(c);
    EXPECT_TRUE(r.valid) << q << "," << l << "," << k;
    EXPECT_EQ(r.window_count, t::ipow(q, l) - 1);
    // The all-zero vertex is the one left out.
    for (const auto& w : t::strings(c)) {
      EXPECT_EQ((w + w).find(std::string(l, '0')), std::string::npos);
    }
  }
}

TEST(Nonprimitive, Errors) {
  EXPECT_EQ(code_of([] { nonprimitive_cycles(2, 4, 3); }), Errc::kOrderTooSmall);
  EXPECT_EQ(code_of([] { nonprimitive_cycles(2, 4, 7); }), Errc::kNotADivisor);
  EXPECT_EQ(code_of([] { nonprimitive_cycles(6, 2, 5); }), Errc::kNotPrimePower);
}

TEST(Zsigmondy, DirectSearch) {
  EXPECT_EQ(zsigmondy_ks(2, 4), (std::vector<std::uint64_t>{5, 15}));
  EXPECT_EQ(zsigmondy_ks(2, 6), (std::vector<std::uint64_t>{9, 21, 63}));
  EXPECT_EQ(zsigmondy_ks(3, 2), (std::vector<std::uint64_t>{4, 8}));
  for (auto k : zsigmondy_ks(3, 4)) EXPECT_NO_THROW(nonprimitive_cycles(3, 4, k)) << k;
}

}  // namespace
}  // namespace ebug
