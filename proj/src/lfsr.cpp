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

#include <string>

#include "ebug/error.hpp"
#include "ebug/numeric.hpp"

namespace ebug {
namespace {

ExtensionField make_field(std::uint32_t q, unsigned degree, const Coeffs& coeffs) {
  return ExtensionField(BaseField(q), degree, coeffs);
}

}  // namespace

CyclicWord lfsr_debruijn(std::uint32_t q, unsigned l, const Coeffs& coeffs) {
  const auto field = make_field(q, l, coeffs);
  const std::uint64_t n = field.group_order();
  std::vector<Symbol> word;
  word.reserve(n + 1);
  for (std::uint64_t i = 0; i < n; ++i) {
    word.push_back(field.first_coord(field.antilog_index(i)));
    // Replace the edge (1, alpha) by (1, 0), (0, alpha).
    if (i == 0) word.push_back(0);
  }
  return CyclicWord(std::move(word));
}

Colouring lfsr_split(std::uint32_t q, unsigned l, std::uint64_t k, const Coeffs& coeffs) {
  const auto field = make_field(q, l, coeffs);
  const std::uint64_t n = field.group_order();
  const std::uint64_t m = n / (q - 1);
  if (k == 0) throw Error(Errc::kInvalidInput, "k must be positive");
  if (k > m) {
    throw Error(Errc::kKTooLarge, "k = " + std::to_string(k) + " exceeds (q^l-1)/(q-1) = " +
                                      std::to_string(m));
  }
  if (k < l) {
    throw Error(Errc::kInvalidInput, "k = " + std::to_string(k) + " is shorter than the window");
  }
  const auto alpha_k = field.pow(field.alpha(), static_cast<std::int64_t>(k % n));
  const auto denom = field.sub(alpha_k, field.one());
  std::vector<CyclicWord> words;
  for (std::uint32_t e = 1; e < q; ++e) {
    std::uint64_t start = 0;
    if (denom == field.zero()) {
      // alpha^k = 1 forces k = q^l - 1, hence q = 2 and a single cycle:
      // the whole LFSR run from 1.
      if (q != 2) throw Error(Errc::kDegenerateK, "alpha^k = 1");
    } else {
      const auto beta = field.div(field.mul(field.alpha(), field.scalar(static_cast<Symbol>(e))), denom);
      start = field.discrete_log(beta);
    }
    std::vector<Symbol> w(k);
    for (std::uint64_t i = 0; i < k; ++i) w[i] = field.first_coord(field.antilog_index(start + i));
    words.emplace_back(std::move(w));
  }
  return Colouring(q, k, l, std::move(words));
}

TranslationSystem::TranslationSystem(ExtensionField field) : field_(std::move(field)) {
  const auto one_minus_alpha = field_.sub(field_.one(), field_.alpha());
  if (one_minus_alpha == field_.zero()) {
    throw Error(Errc::kDegenerateField, "alpha = 1, the translation maps have no fixed point");
  }
  for (std::uint32_t e = 0; e < field_.q(); ++e) {
    fixed_points_.push_back(field_.div(
        field_.mul(field_.alpha(), field_.scalar(static_cast<Symbol>(e))), one_minus_alpha));
  }
}

FieldElement TranslationSystem::xi(Symbol e, const FieldElement& b) const {
  return field_.add(field_.mul(field_.alpha(), b), field_.mul(field_.alpha(), field_.scalar(e)));
}

Colouring lfsr_translate(std::uint32_t q, unsigned l, const Coeffs& coeffs) {
  if (l == 0) throw Error(Errc::kInvalidInput, "l must be positive");
  if (l == 1) {
    const BaseField base(q);
    if (coeffs && !coeffs->empty()) {
      throw Error(Errc::kInvalidInput, "l = 1 takes no feedback coefficients");
    }
    std::vector<CyclicWord> loops;
    for (std::uint32_t e = 0; e < q; ++e) loops.emplace_back(std::vector<Symbol>{static_cast<Symbol>(e)});
    return Colouring(q, 1, 1, std::move(loops));
  }
  if (is_prime_power(q) && numeric::pow_or_throw(q, l - 1) < 3) {
    throw Error(Errc::kDegenerateField, "(q, l) = (2, 2): alpha = 1 in GF(2)");
  }
  const TranslationSystem sys(make_field(q, l - 1, coeffs));
  const auto& field = sys.field();
  const auto& base = field.base();
  const std::uint64_t n = field.group_order();

  // Fixed points are the constant vertices; index them by their symbol.
  std::vector<FieldElement> by_symbol(q);
  for (std::uint32_t e = 0; e < q; ++e) {
    const auto& fp = sys.fixed_point(static_cast<Symbol>(e));
    by_symbol[fp.coords[0]] = fp;
  }

  std::vector<CyclicWord> words;
  for (std::uint32_t c = 0; c < q; ++c) {
    const auto& shift = by_symbol[c];
    const auto loop_at = field.encode(by_symbol[base.add(static_cast<Symbol>(c), 1)]);
    std::vector<Symbol> w;
    w.reserve(n + 1);
    bool inserted = false;
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto v = field.add(field.antilog(i), shift);
      w.push_back(v.coords[0]);
      if (!inserted && field.encode(v) == loop_at) {
        // phi is a constant vertex, so repeating its first symbol walks the loop.
        w.push_back(v.coords[0]);
        inserted = true;
      }
    }
    if (!inserted) throw Error(Errc::kDegenerateField, "loop vertex missing from translated cycle");
    words.emplace_back(std::move(w));
  }
  return Colouring(q, n + 1, l, std::move(words));
}

Colouring nonprimitive_cycles(std::uint32_t q, unsigned l, std::uint64_t k, const Coeffs& coeffs) {
  const auto field = make_field(q, l, coeffs);
  const std::uint64_t n = field.group_order();
  if (k == 0 || n % k != 0) {
    throw Error(Errc::kNotADivisor, std::to_string(k) + " does not divide " + std::to_string(n));
  }
  for (unsigned i = 1; i < l; ++i) {
    if ((numeric::pow_or_throw(q, i) - 1) % k == 0) {
      throw Error(Errc::kOrderTooSmall, std::to_string(k) + " divides q^" + std::to_string(i) +
                                            " - 1, beta lies in a subfield");
    }
  }
  const auto& base = field.base();
  const std::uint64_t step = n / k;  // beta = alpha^step

  // Columns are beta^0 .. beta^{l-1}; coefficient of 1 in that basis is row 0
  // of the inverse.
  SymbolMatrix basis(l, std::vector<Symbol>(l));
  for (unsigned j = 0; j < l; ++j) {
    const auto bj = field.antilog(j * step);
    for (unsigned i = 0; i < l; ++i) basis[i][j] = bj.coords[i];
  }
  const auto inverse = mat_inverse(base, basis);
  if (!inverse) throw Error(Errc::kOrderTooSmall, "powers of beta are not a basis");
  const auto& trace_row = (*inverse)[0];
  auto coeff_of_one = [&](ElementIndex idx) {
    const auto el = field.decode(idx);
    Symbol s = 0;
    for (unsigned i = 0; i < l; ++i) s = base.add(s, base.mul(trace_row[i], el.coords[i]));
    return s;
  };

  // Cosets of <beta> are alpha^j <beta>, j = 0 .. step-1; taking j in
  // increasing order is the greedy smallest-uncovered-log choice.
  std::vector<CyclicWord> words;
  words.reserve(step);
  for (std::uint64_t j = 0; j < step; ++j) {
    std::vector<Symbol> w(k);
    for (std::uint64_t i = 0; i < k; ++i) w[i] = coeff_of_one(field.antilog_index(j + i * step));
    words.emplace_back(std::move(w));
  }
  return Colouring(q, k, l, std::move(words));
}

std::vector<std::uint64_t> zsigmondy_ks(std::uint64_t q, unsigned l) {
  if (q < 2 || l == 0) throw Error(Errc::kInvalidInput, "need q >= 2 and l >= 1");
  const std::uint64_t n = numeric::pow_or_throw(q, l) - 1;
  std::vector<std::uint64_t> smaller;
  for (unsigned i = 1; i < l; ++i) smaller.push_back(numeric::pow_or_throw(q, i) - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k : numeric::divisors(n)) {
    if (k <= 1) continue;
    bool ok = true;
    for (std::uint64_t s : smaller) {
      if (s % k == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(k);
  }
  return out;
}

}  // namespace ebug
