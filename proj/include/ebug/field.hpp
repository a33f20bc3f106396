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

#ifndef EBUG_FIELD_HPP_
#define EBUG_FIELD_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ebug/symbol.hpp"

// Finite-field arithmetic for GF(q^l) over a prime-power base GF(q).
//
// Extension-field elements are written in the Fibonacci basis of a primitive
// element alpha: the coordinates of b are (T(b), T(alpha b), ...,
// T(alpha^{l-1} b)) where T reads the coefficient of 1 in the power basis.
// In these coordinates multiplication by alpha drops the leftmost symbol and
// appends sum_i p_i v_i, which is exactly an edge of the de Bruijn graph
// dB(q, l). Elements therefore double as de Bruijn vertices, and their
// integer index (coordinates read as a base-q number, leftmost digit most
// significant) is the vertex's lexicographic rank.
namespace ebug {

struct PrimePower {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t s = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

std::optional<PrimePower> is_prime_power(std::uint64_t n);

// Dense matrices over a base field. Row-major, row i is m[i].
using SymbolMatrix = std::vector<std::vector<Symbol>>;

// GF(q) with q = p^s. For s > 1 the symbol d_0 + d_1 p + ... encodes the
// polynomial d_0 + d_1 x + ... reduced by the lexicographically smallest
// primitive modulus of degree s over Z_p.
class BaseField {
 public:
  explicit BaseField(std::uint32_t q);

  std::uint32_t q() const { return pp_.q; }
  std::uint32_t characteristic() const { return pp_.p; }
  const PrimePower& prime_power() const { return pp_; }
  // (c_0, ..., c_{s-1}) with x^s = sum c_i x^i; empty for prime q.
  const std::vector<Symbol>& modulus() const { return modulus_; }

  Symbol add(Symbol a, Symbol b) const { return add_[a * pp_.q + b]; }
  Symbol sub(Symbol a, Symbol b) const { return add_[a * pp_.q + neg_[b]]; }
  Symbol neg(Symbol a) const { return neg_[a]; }
  Symbol mul(Symbol a, Symbol b) const { return mul_[a * pp_.q + b]; }
  // Throws kDivisionByZero for 0.
  Symbol inv(Symbol a) const;

  std::span<const Symbol> add_table() const { return add_; }
  std::span<const Symbol> mul_table() const { return mul_; }

 private:
  PrimePower pp_;
  std::vector<Symbol> modulus_;
  std::vector<Symbol> add_;
  std::vector<Symbol> mul_;
  std::vector<Symbol> neg_;
  std::vector<Symbol> inv_;
};

inline BaseField make_base_field(std::uint32_t q) { return BaseField(q); }

// True when x has multiplicative order exactly q^l - 1 modulo
// x^l - (p_{l-1} x^{l-1} + ... + p_0), l = coeffs.size().
bool is_primitive(const BaseField& base, std::span<const Symbol> coeffs);

// Lexicographically smallest (p_0, ..., p_{l-1}) passing is_primitive.
std::vector<Symbol> find_primitive_coeffs(const BaseField& base, unsigned degree);

// Plain polynomial arithmetic modulo x^l - sum p_i x^i, coefficient i being
// the coefficient of x^i. Used for primitivity tests and as an independent
// reference for the table arithmetic.
std::vector<Symbol> poly_mulmod(const BaseField& base, std::span<const Symbol> a,
                                std::span<const Symbol> b,
                                std::span<const Symbol> feedback);
std::vector<Symbol> poly_x_pow(const BaseField& base, std::span<const Symbol> feedback,
                               std::uint64_t exponent);

struct FieldElement {
  std::vector<Symbol> coords;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

using ElementIndex = std::uint32_t;

class ExtensionField {
 public:
  // Largest q^l for which log/antilog tables are built.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  // Uses find_primitive_coeffs when coeffs is empty; otherwise validates
  // them (kInvalidInput for wrong shape, kNotPrimitive for wrong order).
  ExtensionField(BaseField base, unsigned degree,
                 std::optional<std::vector<Symbol>> coeffs = std::nullopt);

  const BaseField& base() const { return base_; }
  std::uint32_t q() const { return base_.q(); }
  unsigned degree() const { return degree_; }
  const std::vector<Symbol>& feedback() const { return feedback_; }
  // q^l
  std::uint64_t order() const { return order_; }
  // q^l - 1
  std::uint64_t group_order() const { return order_ - 1; }

  ElementIndex encode(const FieldElement& b) const;
  FieldElement decode(ElementIndex i) const;
  // Leftmost coordinate of the element with this index.
  Symbol first_coord(ElementIndex i) const { return static_cast<Symbol>(i / top_place_); }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement alpha() const;
  // The base-field scalar e, i.e. e * 1.
  FieldElement scalar(Symbol e) const;

  FieldElement fib_step(const FieldElement& b) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement scalar_add(const FieldElement& b, Symbol e) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& b, std::int64_t n) const;

  // log_alpha(b); kLogOfZero for b = 0.
  std::uint64_t discrete_log(const FieldElement& b) const;
  std::uint64_t discrete_log(ElementIndex i) const;
  FieldElement antilog(std::uint64_t i) const;
  ElementIndex antilog_index(std::uint64_t i) const {
    return antilog_[i % group_order()];
  }

  // alpha^{(q^l-1)/k}; kNotADivisor unless k | q^l - 1.
  FieldElement element_of_order(std::uint64_t k) const;

  // Galois state matrix: column j is alpha * alpha^j in the power basis.
  SymbolMatrix companion_matrix() const;
  // C_ij = (M^i)_0j. Maps power-basis coordinates to Fibonacci coordinates.
  SymbolMatrix change_of_basis_matrix() const;

 private:
  void build_tables();

  BaseField base_;
  unsigned degree_;
  std::vector<Symbol> feedback_;
  std::uint64_t order_ = 0;
  std::uint64_t top_place_ = 1;  // q^{l-1}
  std::vector<ElementIndex> log_;
  std::vector<ElementIndex> antilog_;
};

inline ExtensionField make_extension_field(
    BaseField base, unsigned degree,
    std::optional<std::vector<Symbol>> coeffs = std::nullopt) {
  return ExtensionField(std::move(base), degree, std::move(coeffs));
}

// Matrix helpers over a base field.
SymbolMatrix mat_mul(const BaseField& f, const SymbolMatrix& a, const SymbolMatrix& b);
SymbolMatrix mat_transpose(const SymbolMatrix& a);
std::vector<Symbol> mat_vec(const BaseField& f, const SymbolMatrix& a,
                            std::span<const Symbol> v);
// Gauss-Jordan inverse; nullopt when singular.
std::optional<SymbolMatrix> mat_inverse(const BaseField& f, const SymbolMatrix& a);

}  // namespace ebug

#endif  // EBUG_FIELD_HPP_
