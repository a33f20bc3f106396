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

#ifndef EBUG_NUMERIC_HPP_
#define EBUG_NUMERIC_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Integer helpers: primality, factorisation, divisors and overflow-checked
// powers. All inputs are 64-bit; nothing here allocates beyond the result.
namespace ebug::numeric {

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Trial division up to 2^20, Pollard's rho for whatever cofactor remains.
// Primes come out ascending. factorize(0) and factorize(1) are empty.
Factorization factorize(std::uint64_t n);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);

// Throws Error{kOverflow} when base^exp does not fit.
std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exp);

int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);

}  // namespace ebug::numeric

#endif  // EBUG_NUMERIC_HPP_
