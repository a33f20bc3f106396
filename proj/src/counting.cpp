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

#include "ebug/counting.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "ebug/error.hpp"
#include "ebug/numeric.hpp"

namespace ebug {
namespace {

void require_positive(std::uint64_t v, const char* name) {
  if (v == 0) throw Error(Errc::kInvalidInput, std::string(name) + " must be positive");
}

}  // namespace

CountingTables::CountingTables(std::uint64_t limit) : mu_(limit + 1, 1), phi_(limit + 1) {
  std::vector<std::uint64_t> primes;
  std::vector<bool> composite(limit + 1, false);
  mu_[0] = 0;
  if (limit >= 1) phi_[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu_[i] = -1;
      phi_[i] = i - 1;
    }
    for (std::uint64_t p : primes) {
      const std::uint64_t m = i * p;
      if (m > limit) break;
      composite[m] = true;
      if (i % p == 0) {
        mu_[m] = 0;
        phi_[m] = phi_[i] * p;
        break;
      }
      mu_[m] = -mu_[i];
      phi_[m] = phi_[i] * (p - 1);
    }
  }
}

std::uint64_t upper_bound(std::uint64_t q, std::uint64_t k, std::uint64_t l) {
  require_positive(k, "k");
  return numeric::pow_or_throw(q, l) / k;
}

std::uint64_t lll_lower_bound(std::uint64_t q, std::uint64_t k, std::uint64_t l) {
  require_positive(k, "k");
  require_positive(l, "l");
  constexpr long double kE = std::numbers::e_v<long double>;
  const auto vertices = static_cast<long double>(numeric::pow_or_throw(q, l));
  const auto denom = static_cast<long double>(2 * l - 1) * static_cast<long double>(k) * kE;
  auto f = static_cast<std::uint64_t>(std::floor(vertices / denom));
  // Settle the floor by comparing products rather than trusting the quotient.
  while (f > 0 && static_cast<long double>(f) * denom > vertices) --f;
  while (static_cast<long double>(f + 1) * denom <= vertices) ++f;
  return f;
}

std::uint64_t moreau(std::uint64_t q, std::uint64_t t) {
  require_positive(t, "t");
  __int128 sum = 0;
  for (std::uint64_t d : numeric::divisors(t)) {
    const int mu = numeric::mobius(t / d);
    if (mu == 0) continue;
    sum += static_cast<__int128>(mu) * numeric::pow_or_throw(q, d);
  }
  return static_cast<std::uint64_t>(sum / t);
}

std::uint64_t necklace_count(std::uint64_t q, std::uint64_t l) {
  require_positive(l, "l");
  unsigned __int128 sum = 0;
  for (std::uint64_t d : numeric::divisors(l)) {
    sum += static_cast<unsigned __int128>(numeric::totient(l / d)) * numeric::pow_or_throw(q, d);
  }
  return static_cast<std::uint64_t>(sum / l);
}

std::uint64_t debruijn_count(std::uint64_t q, std::uint64_t l) {
  require_positive(q, "q");
  require_positive(l, "l");
  const std::uint64_t reps = numeric::pow_or_throw(q, l - 1);
  std::map<std::uint64_t, __int128> exponents;
  for (std::uint64_t i = 2; i <= q; ++i) {
    for (const auto& [p, e] : numeric::factorize(i)) {
      exponents[p] += static_cast<__int128>(e) * reps;
    }
  }
  for (const auto& [p, e] : numeric::factorize(q)) {
    exponents[p] -= static_cast<__int128>(e) * l;
  }
  std::uint64_t result = 1;
  for (const auto& [p, e] : exponents) {
    if (e < 0) throw Error(Errc::kInvalidInput, "count is not an integer");
    if (e > 64) throw Error(Errc::kOverflow, "de Bruijn count exceeds 64 bits");
    const auto term = numeric::checked_pow(p, static_cast<std::uint64_t>(e));
    const auto next = term ? numeric::checked_mul(result, *term) : std::nullopt;
    if (!next) throw Error(Errc::kOverflow, "de Bruijn count exceeds 64 bits");
    result = *next;
  }
  return result;
}

}  // namespace ebug
