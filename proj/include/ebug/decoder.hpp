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

#ifndef EBUG_DECODER_HPP_
#define EBUG_DECODER_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "ebug/words.hpp"

namespace ebug {

struct Sighting {
  std::size_t ebug = 0;
  std::size_t rotation = 0;

  friend bool operator==(const Sighting&, const Sighting&) = default;
};

// Exact lookup from an observed l-window to the robot and its orientation.
class DecoderTable {
 public:
  // kInvalidColouring unless is_valid(c).
  static DecoderTable build(const Colouring& c);

  std::size_t l() const { return l_; }
  std::size_t size() const { return entries_.size(); }

  // kNotFound for unknown, malformed or wrong-length windows.
  Sighting decode(std::span<const Symbol> window) const;
  Sighting decode(std::string_view window) const;

 private:
  DecoderTable(std::uint32_t q, std::size_t l) : q_(q), l_(l) {}

  std::uint32_t q_;
  std::size_t l_;
  std::unordered_map<std::string, Sighting> entries_;
};

}  // namespace ebug

#endif  // EBUG_DECODER_HPP_
