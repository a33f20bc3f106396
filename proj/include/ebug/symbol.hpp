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

#ifndef EBUG_SYMBOL_HPP_
#define EBUG_SYMBOL_HPP_

#include <cstdint>
#include <optional>

namespace ebug {

using Symbol = std::uint8_t;

// Text alphabet: 0-9 then a-z.
inline constexpr unsigned kMaxTextAlphabet = 36;
// Largest alphabet representable by Symbol.
inline constexpr unsigned kMaxAlphabet = 256;

inline char symbol_char(Symbol s) {
  return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + (s - 10));
}

inline std::optional<Symbol> parse_symbol(char c) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Symbol>(c - 'a' + 10);
  return std::nullopt;
}

}  // namespace ebug

#endif  // EBUG_SYMBOL_HPP_
