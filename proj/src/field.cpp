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

#include "ebug/field.hpp"

#include <string>

#include "ebug/error.hpp"
#include "ebug/numeric.hpp"

namespace ebug {
namespace {

std::vector<Symbol> poly_one(std::size_t n) {
  std::vector<Symbol> r(n, 0);
  r[0] = 1;
  return r;
}

std::vector<Symbol> poly_x(std::span<const Symbol> feedback) {
  const std::size_t n = feedback.size();
  if (n == 1) return {feedback[0]};
  std::vector<Symbol> r(n, 0);
  r[1] = 1;
  return r;
}

}  // namespace

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto f = numeric::factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(f[0].first),
                    f[0].second};
}

BaseField::BaseField(std::uint32_t q) {
  const auto pp = is_prime_power(q);
  if (!pp) throw Error(Errc::kNotPrimePower, std::to_string(q) + " is not a prime power");
  if (q > kMaxTextAlphabet) {
    throw Error(Errc::kInvalidInput, "base field size " + std::to_string(q) + " exceeds 36");
  }
  pp_ = *pp;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  if (pp_.s == 1) {
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        add_[a * q + b] = static_cast<Symbol>((a + b) % q);
        mul_[a * q + b] = static_cast<Symbol>((a * b) % q);
      }
    }
  } else {
    const BaseField prime(pp_.p);
    modulus_ = find_primitive_coeffs(prime, pp_.s);
    const std::uint32_t p = pp_.p;
    auto digits = [&](std::uint32_t v) {
      std::vector<Symbol> d(pp_.s);
      for (auto& x : d) {
        x = static_cast<Symbol>(v % p);
        v /= p;
      }
      return d;
    };
    auto pack = [&](const std::vector<Symbol>& d) {
      std::uint32_t v = 0;
      for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
      return static_cast<Symbol>(v);
    };
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto da = digits(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto db = digits(b);
        std::vector<Symbol> sum(pp_.s);
        for (std::uint32_t i = 0; i < pp_.s; ++i) sum[i] = prime.add(da[i], db[i]);
        add_[a * q + b] = pack(sum);
        mul_[a * q + b] = pack(poly_mulmod(prime, da, db, modulus_));
      }
    }
  }
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<Symbol>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Symbol>(b);
    }
  }
}

Symbol BaseField::inv(Symbol a) const {
  if (a == 0) throw Error(Errc::kDivisionByZero, "inverse of 0 in GF(" + std::to_string(q()) + ")");
  return inv_[a];
}

std::vector<Symbol> poly_mulmod(const BaseField& base, std::span<const Symbol> a,
                                std::span<const Symbol> b,
                                std::span<const Symbol> feedback) {
  const std::size_t n = feedback.size();
  std::vector<Symbol> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
    }
  }
  for (std::size_t i = 2 * n - 1; i-- > n;) {
    const Symbol c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      prod[i - n + j] = base.add(prod[i - n + j], base.mul(c, feedback[j]));
    }
  }
  prod.resize(n);
  return prod;
}

std::vector<Symbol> poly_x_pow(const BaseField& base, std::span<const Symbol> feedback,
                               std::uint64_t exponent) {
  auto result = poly_one(feedback.size());
  auto sq = poly_x(feedback);
  while (exponent) {
    if (exponent & 1) result = poly_mulmod(base, result, sq, feedback);
    sq = poly_mulmod(base, sq, sq, feedback);
    exponent >>= 1;
  }
  return result;
}

bool is_primitive(const BaseField& base, std::span<const Symbol> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) return false;
  for (Symbol c : coeffs) {
    if (c >= base.q()) return false;
  }
  if (coeffs[0] == 0) return false;
  const auto order = numeric::checked_pow(base.q(), n);
  if (!order || *order > (std::uint64_t{1} << 62)) {
    throw Error(Errc::kTooLarge, "q^l too large for a primitivity test");
  }
  const std::uint64_t group = *order - 1;
  const auto one = poly_one(n);
  if (poly_x_pow(base, coeffs, group) != one) return false;
  for (std::uint64_t r : numeric::prime_divisors(group)) {
    if (poly_x_pow(base, coeffs, group / r) == one) return false;
  }
  return true;
}

std::vector<Symbol> find_primitive_coeffs(const BaseField& base, unsigned degree) {
  if (degree == 0) throw Error(Errc::kInvalidInput, "degree must be positive");
  std::vector<Symbol> c(degree, 0);
  c[0] = 1;
  const std::uint32_t q = base.q();
  while (true) {
    if (is_primitive(base, c)) return c;
    // Odometer with c[0] most significant.
    std::size_t i = degree;
    while (i-- > 0) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
    if (c[0] == 0) {
      // Unreachable: every finite field has a primitive polynomial.
      throw Error(Errc::kNotPrimitive, "no primitive polynomial found");
    }
  }
}

ExtensionField::ExtensionField(BaseField base, unsigned degree,
                               std::optional<std::vector<Symbol>> coeffs)
    : base_(std::move(base)), degree_(degree) {
  if (degree_ == 0) throw Error(Errc::kInvalidInput, "extension degree must be positive");
  const auto order = numeric::checked_pow(base_.q(), degree_);
  if (!order || *order > kMaxOrder) {
    throw Error(Errc::kTooLarge, "GF(" + std::to_string(base_.q()) + "^" +
                                     std::to_string(degree_) + ") exceeds table limit");
  }
  order_ = *order;
  top_place_ = order_ / base_.q();
  if (coeffs && !coeffs->empty()) {
    if (coeffs->size() != degree_) {
      throw Error(Errc::kInvalidInput, "expected " + std::to_string(degree_) +
                                           " feedback coefficients, got " +
                                           std::to_string(coeffs->size()));
    }
    for (Symbol c : *coeffs) {
      if (c >= base_.q()) throw Error(Errc::kInvalidInput, "feedback coefficient out of range");
    }
    if (!is_primitive(base_, *coeffs)) {
      throw Error(Errc::kNotPrimitive, "supplied feedback coefficients are not primitive");
    }
    feedback_ = *coeffs;
  } else {
    feedback_ = find_primitive_coeffs(base_, degree_);
  }
  build_tables();
}

void ExtensionField::build_tables() {
  const std::uint64_t n = group_order();
  log_.assign(order_, 0);
  antilog_.assign(n, 0);
  std::vector<bool> seen(order_, false);
  const ElementIndex one_idx = static_cast<ElementIndex>(top_place_);
  FieldElement cur = one();
  for (std::uint64_t i = 0; i < n; ++i) {
    const ElementIndex idx = encode(cur);
    if (idx == 0 || seen[idx]) {
      throw Error(Errc::kNotPrimitive, "LFSR period shorter than q^l - 1");
    }
    seen[idx] = true;
    antilog_[i] = idx;
    log_[idx] = static_cast<ElementIndex>(i);
    cur = fib_step(cur);
  }
  if (encode(cur) != one_idx) {
    throw Error(Errc::kNotPrimitive, "LFSR does not return to 1");
  }
}

ElementIndex ExtensionField::encode(const FieldElement& b) const {
  if (b.coords.size() != degree_) {
    throw Error(Errc::kInvalidInput, "element has " + std::to_string(b.coords.size()) +
                                         " coordinates, field degree is " +
                                         std::to_string(degree_));
  }
  std::uint64_t v = 0;
  for (Symbol c : b.coords) {
    if (c >= base_.q()) throw Error(Errc::kInvalidInput, "coordinate out of range");
    v = v * base_.q() + c;
  }
  return static_cast<ElementIndex>(v);
}

FieldElement ExtensionField::decode(ElementIndex i) const {
  FieldElement r{std::vector<Symbol>(degree_)};
  for (std::size_t j = degree_; j-- > 0;) {
    r.coords[j] = static_cast<Symbol>(i % base_.q());
    i /= base_.q();
  }
  return r;
}

FieldElement ExtensionField::zero() const { return FieldElement{std::vector<Symbol>(degree_, 0)}; }

FieldElement ExtensionField::one() const { return scalar(1); }

FieldElement ExtensionField::alpha() const { return fib_step(one()); }

FieldElement ExtensionField::scalar(Symbol e) const {
  auto r = zero();
  r.coords[0] = e;
  return r;
}

FieldElement ExtensionField::fib_step(const FieldElement& b) const {
  Symbol fb = 0;
  for (unsigned i = 0; i < degree_; ++i) fb = base_.add(fb, base_.mul(feedback_[i], b.coords[i]));
  FieldElement r{std::vector<Symbol>(b.coords.begin() + 1, b.coords.end())};
  r.coords.push_back(fb);
  return r;
}

FieldElement ExtensionField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r{std::vector<Symbol>(degree_)};
  for (unsigned i = 0; i < degree_; ++i) r.coords[i] = base_.add(a.coords[i], b.coords[i]);
  return r;
}

FieldElement ExtensionField::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r{std::vector<Symbol>(degree_)};
  for (unsigned i = 0; i < degree_; ++i) r.coords[i] = base_.sub(a.coords[i], b.coords[i]);
  return r;
}

FieldElement ExtensionField::scalar_add(const FieldElement& b, Symbol e) const {
  FieldElement r = b;
  r.coords[0] = base_.add(r.coords[0], e);
  return r;
}

FieldElement ExtensionField::mul(const FieldElement& a, const FieldElement& b) const {
  const ElementIndex ia = encode(a);
  const ElementIndex ib = encode(b);
  if (ia == 0 || ib == 0) return zero();
  return decode(antilog_[(std::uint64_t{log_[ia]} + log_[ib]) % group_order()]);
}

FieldElement ExtensionField::inv(const FieldElement& b) const {
  const ElementIndex ib = encode(b);
  if (ib == 0) throw Error(Errc::kDivisionByZero, "inverse of 0");
  return decode(antilog_[(group_order() - log_[ib]) % group_order()]);
}

FieldElement ExtensionField::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement ExtensionField::pow(const FieldElement& b, std::int64_t n) const {
  const ElementIndex ib = encode(b);
  if (ib == 0) {
    if (n > 0) return zero();
    if (n == 0) return one();
    throw Error(Errc::kDivisionByZero, "negative power of 0");
  }
  const auto g = static_cast<std::int64_t>(group_order());
  const std::int64_t e = ((n % g) + g) % g;
  const auto exp = static_cast<unsigned __int128>(e) * log_[ib] % group_order();
  return decode(antilog_[static_cast<std::uint64_t>(exp)]);
}

std::uint64_t ExtensionField::discrete_log(const FieldElement& b) const {
  return discrete_log(encode(b));
}

std::uint64_t ExtensionField::discrete_log(ElementIndex i) const {
  if (i == 0) throw Error(Errc::kLogOfZero, "discrete log of 0");
  return log_[i];
}

FieldElement ExtensionField::antilog(std::uint64_t i) const { return decode(antilog_index(i)); }

FieldElement ExtensionField::element_of_order(std::uint64_t k) const {
  if (k == 0 || group_order() % k != 0) {
    throw Error(Errc::kNotADivisor, std::to_string(k) + " does not divide " +
                                        std::to_string(group_order()));
  }
  return antilog(group_order() / k);
}

SymbolMatrix ExtensionField::companion_matrix() const {
  SymbolMatrix m(degree_, std::vector<Symbol>(degree_, 0));
  for (unsigned j = 0; j + 1 < degree_; ++j) m[j + 1][j] = 1;
  for (unsigned i = 0; i < degree_; ++i) m[i][degree_ - 1] = feedback_[i];
  return m;
}

SymbolMatrix ExtensionField::change_of_basis_matrix() const {
  const auto m = companion_matrix();
  SymbolMatrix power(degree_, std::vector<Symbol>(degree_, 0));
  for (unsigned i = 0; i < degree_; ++i) power[i][i] = 1;
  SymbolMatrix c(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = power[0];
    power = mat_mul(base_, power, m);
  }
  return c;
}

SymbolMatrix mat_mul(const BaseField& f, const SymbolMatrix& a, const SymbolMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  SymbolMatrix r(n, std::vector<Symbol>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = f.add(r[i][j], f.mul(a[i][k], b[k][j]));
    }
  }
  return r;
}

SymbolMatrix mat_transpose(const SymbolMatrix& a) {
  if (a.empty()) return {};
  SymbolMatrix r(a[0].size(), std::vector<Symbol>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  }
  return r;
}

std::vector<Symbol> mat_vec(const BaseField& f, const SymbolMatrix& a, std::span<const Symbol> v) {
  std::vector<Symbol> r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) r[i] = f.add(r[i], f.mul(a[i][j], v[j]));
  }
  return r;
}

std::optional<SymbolMatrix> mat_inverse(const BaseField& f, const SymbolMatrix& a) {
  const std::size_t n = a.size();
  SymbolMatrix m = a;
  SymbolMatrix inv(n, std::vector<Symbol>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Symbol s = f.inv(m[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = f.mul(m[col][j], s);
      inv[col][j] = f.mul(inv[col][j], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Symbol factor = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = f.sub(m[r][j], f.mul(factor, m[col][j]));
        inv[r][j] = f.sub(inv[r][j], f.mul(factor, inv[col][j]));
      }
    }
  }
  return inv;
}

}  // namespace ebug
