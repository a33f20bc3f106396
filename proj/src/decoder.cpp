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

#include "ebug/decoder.hpp"

#include "ebug/error.hpp"

namespace ebug {

DecoderTable DecoderTable::build(const Colouring& c) {
  const auto report = is_valid(c);
  if (!report.valid) {
    throw Error(Errc::kInvalidColouring, "cannot decode an invalid colouring");
  }
  DecoderTable table(c.q(), c.l());
  table.entries_.reserve(c.size() * c.k());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& w = c.words()[i];
    for (std::size_t r = 0; r < w.size(); ++r) {
      const auto win = w.window(r, c.l());
      table.entries_.emplace(std::string(win.begin(), win.end()), Sighting{i, r});
    }
  }
  return table;
}

Sighting DecoderTable::decode(std::span<const Symbol> window) const {
  if (window.size() != l_) throw Error(Errc::kNotFound, "window has the wrong length");
  for (Symbol s : window) {
    if (s >= q_) throw Error(Errc::kNotFound, "window uses a symbol outside the alphabet");
  }
  const auto it = entries_.find(std::string(window.begin(), window.end()));
  if (it == entries_.end()) throw Error(Errc::kNotFound, "window not on any robot");
  return it->second;
}

Sighting DecoderTable::decode(std::string_view window) const {
  std::vector<Symbol> symbols;
  symbols.reserve(window.size());
  for (char ch : window) {
    const auto s = parse_symbol(ch);
    if (!s) throw Error(Errc::kNotFound, "window is not over 0-9a-z");
    symbols.push_back(*s);
  }
  return decode(symbols);
}

}  // namespace ebug
