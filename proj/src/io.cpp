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

#include "ebug/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ebug/error.hpp"
#include "ebug/numeric.hpp"

namespace ebug::io {
namespace {

constexpr std::uint64_t kMaxDotVertices = std::uint64_t{1} << 16;

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(Errc::kMalformed, "line " + std::to_string(line) + ": " + why);
}

// Decimal without sign or leading zeros, so that writing it back is exact.
std::uint64_t parse_decimal(std::string_view s, std::size_t line) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) malformed(line, "bad number '" + std::string(s) + "'");
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    malformed(line, "bad number '" + std::string(s) + "'");
  }
  return v;
}

std::string label(std::uint64_t code, std::uint32_t q, std::size_t l) {
  std::string s(l, '0');
  for (std::size_t j = l; j-- > 0;) {
    s[j] = symbol_char(static_cast<Symbol>(code % q));
    code /= q;
  }
  return s;
}

}  // namespace

ColouringFile make_file(Colouring c, bool walks) {
  ColouringFile f{std::move(c), walks, {}};
  if (walks) f.comments.emplace_back(0, std::string(kWalksMarker));
  return f;
}

ColouringFile parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::kMalformed, "empty file");
  if (text.back() != '\n') throw Error(Errc::kMalformed, "missing trailing newline");
  text.remove_suffix(1);

  std::vector<std::pair<std::size_t, std::string>> comments;
  std::vector<std::string_view> lines;
  bool walks = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line[0] == '#') {
      if (line == kWalksMarker) walks = true;
      comments.emplace_back(lines.size(), std::string(line));
      continue;
    }
    lines.push_back(line);
  }
  if (lines.empty()) throw Error(Errc::kMalformed, "missing header");

  std::vector<std::uint64_t> header;
  const std::string_view h = lines[0];
  std::size_t start = 0;
  while (true) {
    const std::size_t sp = h.find(' ', start);
    header.push_back(parse_decimal(h.substr(start, sp == std::string_view::npos ? sp : sp - start), 1));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  if (header.size() != 4) malformed(1, "header must be 'q k l n'");
  const auto [q, k, l, n] = std::tie(header[0], header[1], header[2], header[3]);
  if (q < 1 || q > kMaxTextAlphabet) malformed(1, "q must be in [1, 36]");
  if (k < 1 || l < 1 || l > k) malformed(1, "need 1 <= l <= k");
  if (lines.size() - 1 != n) {
    malformed(1, "header declares " + std::to_string(n) + " words, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<CyclicWord> words;
  words.reserve(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != k) {
      malformed(i + 1, "word has length " + std::to_string(lines[i].size()) + ", expected " +
                           std::to_string(k));
    }
    std::vector<Symbol> w;
    w.reserve(k);
    for (char c : lines[i]) {
      const auto s = parse_symbol(c);
      if (!s || *s >= q) malformed(i + 1, std::string("symbol '") + c + "' outside alphabet");
      w.push_back(*s);
    }
    words.emplace_back(std::move(w));
  }
  return ColouringFile{Colouring(static_cast<std::uint32_t>(q), k, l, std::move(words)), walks,
                       std::move(comments)};
}

std::string format(const ColouringFile& file) {
  const auto& c = file.colouring;
  if (c.q() > kMaxTextAlphabet) throw Error(Errc::kInvalidInput, "q > 36 has no text form");
  std::string out;
  std::size_t next_comment = 0;
  auto flush_comments = [&](std::size_t before) {
    while (next_comment < file.comments.size() && file.comments[next_comment].first <= before) {
      out += file.comments[next_comment++].second;
      out += '\n';
    }
  };
  flush_comments(0);
  out += std::to_string(c.q()) + ' ' + std::to_string(c.k()) + ' ' + std::to_string(c.l()) + ' ' +
         std::to_string(c.size()) + '\n';
  for (std::size_t i = 0; i < c.size(); ++i) {
    flush_comments(i + 1);
    out += c.words()[i].to_string();
    out += '\n';
  }
  flush_comments(static_cast<std::size_t>(-1));
  return out;
}

ColouringFile read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kMalformed, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::filesystem::path& path, const ColouringFile& file) {
  const std::string text = format(file);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidInput, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::kInvalidInput, "write failed for " + path.string());
}

ValidityReport check(const ColouringFile& file) {
  return file.walks ? is_walk_valid(file.colouring) : is_valid(file.colouring);
}

nlohmann::json report_json(const Colouring& c, const ValidityReport& report) {
  nlohmann::json j;
  j["valid"] = report.valid;
  j["q"] = c.q();
  j["k"] = c.k();
  j["l"] = c.l();
  j["n"] = c.size();
  j["window_count"] = report.window_count;
  if (report.conflict) {
    const auto& x = *report.conflict;
    nlohmann::json window;
    if (c.q() <= kMaxTextAlphabet) {
      std::string s;
      for (Symbol v : x.window) s.push_back(symbol_char(v));
      window = s;
    } else {
      window = x.window;
    }
    j["conflict"] = {{"window", window},
                     {"a", {x.first.word, x.first.rotation}},
                     {"b", {x.second.word, x.second.rotation}}};
  }
  return j;
}

std::string debruijn_dot(std::uint32_t q, std::size_t l) {
  if (q < 1 || q > kMaxTextAlphabet || l < 1) throw Error(Errc::kInvalidInput, "need 1 <= q <= 36, l >= 1");
  const auto total = numeric::checked_pow(q, l);
  if (!total || *total > kMaxDotVertices) throw Error(Errc::kTooLarge, "q^l exceeds 2^16");
  std::string out = "digraph \"dB(" + std::to_string(q) + "," + std::to_string(l) + ")\" {\n";
  for (std::uint64_t v = 0; v < *total; ++v) out += "  \"" + label(v, q, l) + "\";\n";
  for (std::uint64_t v = 0; v < *total; ++v) {
    for (std::uint32_t a = 0; a < q; ++a) {
      const std::uint64_t w = (v * q + a) % *total;
      out += "  \"" + label(v, q, l) + "\" -> \"" + label(w, q, l) + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

std::string necklace_dot(const NecklaceGraph& g) {
  if (g.q > kMaxTextAlphabet) throw Error(Errc::kInvalidInput, "q > 36 has no text labels");
  std::string out = std::string("graph \"") + (g.aperiodic_only ? "N'(" : "N(") +
                    std::to_string(g.q) + "," + std::to_string(g.l) + ")\" {\n";
  for (const auto& v : g.vertices) out += "  \"" + v.to_string() + "\";\n";
  for (const auto& [a, b] : g.edges) {
    out += "  \"" + g.vertices[a].to_string() + "\" -- \"" + g.vertices[b].to_string() + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ebug::io
