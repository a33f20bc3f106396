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

#ifndef EBUG_IO_HPP_
#define EBUG_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ebug/necklace.hpp"
#include "ebug/words.hpp"
#include "json.hpp"

// Colouring text files, JSON validity reports and DOT graph export.
//
// File layout:
//   # optional comment lines anywhere
//   q k l n
//   n lines of k symbols over 0-9a-z
// Every line ends in '\n'. A comment line "# mode=walks" marks a file of
// closed walks, checked with the walk semantics.
namespace ebug::io {

inline constexpr std::string_view kWalksMarker = "# mode=walks";

struct ColouringFile {
  Colouring colouring;
  bool walks = false;
  // (number of header and word lines before the comment, comment text).
  std::vector<std::pair<std::size_t, std::string>> comments;
};

// Wraps a colouring, adding the walks marker before the header if needed.
ColouringFile make_file(Colouring c, bool walks = false);

// kMalformed on any deviation from the layout.
ColouringFile parse(std::string_view text);
std::string format(const ColouringFile& file);

ColouringFile read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const ColouringFile& file);

// is_valid or is_walk_valid, according to the file's mode.
ValidityReport check(const ColouringFile& file);

// {valid, q, k, l, n, window_count, conflict: {window, a: [w, r], b: [w, r]}}
// with conflict present only for invalid colourings.
nlohmann::json report_json(const Colouring& c, const ValidityReport& report);

// dB(q, l) with vertices labelled by their words and loops drawn explicitly.
std::string debruijn_dot(std::uint32_t q, std::size_t l);
std::string necklace_dot(const NecklaceGraph& g);

}  // namespace ebug::io

#endif  // EBUG_IO_HPP_
