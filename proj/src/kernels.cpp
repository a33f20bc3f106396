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

#include "ebug/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <parallel/algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "ebug/error.hpp"
#include "ebug/numeric.hpp"

namespace ebug::kernels {
namespace {

template <typename Key, typename KeyFn>
ValidityReport scan_windows(const Colouring& c, bool cross_word_only, KeyFn key_of) {
  ValidityReport report;
  std::unordered_map<Key, WindowPosition> seen;
  seen.reserve(c.size() * c.k());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& w = c.words()[i];
    for (std::size_t r = 0; r < w.size(); ++r) {
      const WindowPosition pos{i, r};
      auto [it, inserted] = seen.try_emplace(key_of(w, r), pos);
      if (inserted || report.conflict) continue;
      if (cross_word_only && it->second.word == i) continue;
      report.conflict = WindowConflict{w.window(r, c.l()), it->second, pos};
    }
  }
  report.window_count = seen.size();
  report.valid = !report.conflict.has_value();
  return report;
}

ValidityReport scan(const Colouring& c, bool cross_word_only) {
  const WindowCodec codec(c.q(), c.l());
  if (codec.packed()) {
    return scan_windows<std::uint64_t>(
        c, cross_word_only, [&](const CyclicWord& w, std::size_t r) { return codec.encode_at(w, r); });
  }
  return scan_windows<std::string>(c, cross_word_only, [&](const CyclicWord& w, std::size_t r) {
    const auto win = w.window(r, c.l());
    return std::string(win.begin(), win.end());
  });
}

void check_product_inputs(const Colouring& a, const Colouring& b) {
  if (static_cast<std::uint64_t>(a.q()) * b.q() > kMaxAlphabet) {
    throw Error(Errc::kInvalidInput, "product alphabet exceeds 256 symbols");
  }
}

CyclicWord merge(const CyclicWord& x, const CyclicWord& y, std::size_t shift, std::size_t len,
                 std::uint32_t qy) {
  std::vector<Symbol> out(len);
  const std::size_t kx = x.size();
  const std::size_t ky = y.size();
  for (std::size_t p = 0; p < len; ++p) {
    out[p] = static_cast<Symbol>(x[p % kx] * qy + y[(p + shift) % ky]);
  }
  return CyclicWord(std::move(out));
}

CyclicWord interleave_rotated(std::span<const CyclicWord> reps, std::size_t t,
                              std::uint64_t source, std::size_t n, const RotationTuple& rot) {
  const std::size_t k = reps[0].size();
  std::vector<Symbol> out(t * k);
  // Source tuple digits, first index most significant.
  std::vector<std::size_t> idx(t);
  for (std::size_t i = t; i-- > 0;) {
    idx[i] = static_cast<std::size_t>(source % n);
    source /= n;
  }
  for (std::size_t i = 0; i < t; ++i) {
    const auto& w = reps[idx[i]];
    for (std::size_t x = 0; x < k; ++x) out[x * t + i] = w[(x + rot[i]) % k];
  }
  return CyclicWord(std::move(out));
}

std::uint64_t source_count(std::size_t n, std::size_t t, std::size_t rotations) {
  const auto sources = numeric::checked_pow(n, t);
  const auto total = sources ? numeric::checked_mul(*sources, rotations) : std::nullopt;
  if (!total || *total > (std::uint64_t{1} << 32)) {
    throw Error(Errc::kTooLarge, "interleave output too large");
  }
  return *sources;
}

}  // namespace

ValidityReport validity_serial(const Colouring& c) { return scan(c, false); }

ValidityReport walk_validity_serial(const Colouring& c) { return scan(c, true); }

ValidityReport validity_parallel(const Colouring& c) {
  const WindowCodec codec(c.q(), c.l());
  if (!codec.packed()) return validity_serial(c);
  const std::size_t n = c.size();
  const std::size_t k = c.k();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(n * k);

#pragma omp parallel
  {
    std::vector<std::uint64_t> codes(k);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      codec.encode_all(c.words()[static_cast<std::size_t>(i)], codes.data());
      const std::size_t base = static_cast<std::size_t>(i) * k;
      for (std::size_t r = 0; r < k; ++r) entries[base + r] = {codes[r], base + r};
    }
  }
  __gnu_parallel::sort(entries.begin(), entries.end());

  ValidityReport report;
  std::uint64_t best_second = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_first = 0;
  std::uint64_t best_code = 0;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    while (j < entries.size() && entries[j].first == entries[i].first) ++j;
    ++report.window_count;
    if (j - i >= 2 && entries[i + 1].second < best_second) {
      best_second = entries[i + 1].second;
      best_first = entries[i].second;
      best_code = entries[i].first;
    }
    i = j;
  }
  if (best_second != std::numeric_limits<std::uint64_t>::max()) {
    report.conflict = WindowConflict{codec.decode(best_code),
                                     WindowPosition{best_first / k, best_first % k},
                                     WindowPosition{best_second / k, best_second % k}};
  }
  report.valid = !report.conflict.has_value();
  return report;
}

std::vector<CyclicWord> product_serial(const Colouring& a, const Colouring& b) {
  check_product_inputs(a, b);
  const std::size_t len = std::lcm(a.k(), b.k());
  const std::size_t g = std::gcd(a.k(), b.k());
  std::vector<CyclicWord> out;
  out.reserve(a.size() * b.size() * g);
  for (const auto& x : a.words()) {
    for (const auto& y : b.words()) {
      for (std::size_t r = 0; r < g; ++r) out.push_back(merge(x, y, r, len, b.q()));
    }
  }
  return out;
}

std::vector<CyclicWord> product_parallel(const Colouring& a, const Colouring& b) {
  check_product_inputs(a, b);
  const std::size_t len = std::lcm(a.k(), b.k());
  const std::size_t g = std::gcd(a.k(), b.k());
  const std::size_t nb = b.size();
  const std::size_t pairs = a.size() * nb;
  std::vector<CyclicWord> out(pairs * g);
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(pairs); ++p) {
    const auto up = static_cast<std::size_t>(p);
    const auto& x = a.words()[up / nb];
    const auto& y = b.words()[up % nb];
    for (std::size_t r = 0; r < g; ++r) out[up * g + r] = merge(x, y, r, len, b.q());
  }
  return out;
}

CyclicWord interleave_words(std::span<const CyclicWord> words) {
  if (words.empty()) return CyclicWord();
  const std::size_t t = words.size();
  const std::size_t k = words[0].size();
  std::vector<Symbol> out(t * k);
  for (std::size_t i = 0; i < t; ++i) {
    if (words[i].size() != k) throw Error(Errc::kInvalidInput, "interleaved words differ in length");
    for (std::size_t x = 0; x < k; ++x) out[x * t + i] = words[i][x];
  }
  return CyclicWord(std::move(out));
}

std::vector<CyclicWord> interleave_serial(std::span<const CyclicWord> reps, std::size_t t,
                                          std::span<const RotationTuple> rotations) {
  if (reps.empty() || rotations.empty()) return {};
  const std::size_t n = reps.size();
  const std::uint64_t sources = source_count(n, t, rotations.size());
  std::vector<CyclicWord> out;
  out.reserve(sources * rotations.size());
  for (std::uint64_t s = 0; s < sources; ++s) {
    for (const auto& rot : rotations) out.push_back(interleave_rotated(reps, t, s, n, rot));
  }
  return out;
}

std::vector<CyclicWord> interleave_parallel(std::span<const CyclicWord> reps, std::size_t t,
                                            std::span<const RotationTuple> rotations) {
  if (reps.empty() || rotations.empty()) return {};
  const std::size_t n = reps.size();
  const std::uint64_t sources = source_count(n, t, rotations.size());
  const std::size_t per = rotations.size();
  std::vector<CyclicWord> out(sources * per);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(sources); ++s) {
    const auto us = static_cast<std::uint64_t>(s);
    for (std::size_t r = 0; r < per; ++r) {
      out[us * per + r] = interleave_rotated(reps, t, us, n, rotations[r]);
    }
  }
  return out;
}

}  // namespace ebug::kernels
