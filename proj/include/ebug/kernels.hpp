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

#ifndef EBUG_KERNELS_HPP_
#define EBUG_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ebug/words.hpp"

// Data-parallel inner loops. Each OpenMP kernel has a serial twin with the
// same contract; the serial version is the reference the tests compare
// against and the baseline the benchmark measures.
namespace ebug::kernels {

// Below this many windows is_valid stays serial.
inline constexpr std::size_t kParallelValidityThreshold = 1 << 14;

// Single pass with a hash map.
ValidityReport validity_serial(const Colouring& c);
// Encode every window in parallel, sort (code, position) pairs in
// parallel, then read the first conflict off the sorted runs. Falls back to
// the serial pass when windows do not pack into 64 bits.
ValidityReport validity_parallel(const Colouring& c);

// Cross-word uniqueness only.
ValidityReport walk_validity_serial(const Colouring& c);

// Merge every (a-word, b-word, relative rotation j < gcd) triple; output
// index is (i * b.size() + j) * gcd + r.
std::vector<CyclicWord> product_serial(const Colouring& a, const Colouring& b);
std::vector<CyclicWord> product_parallel(const Colouring& a, const Colouring& b);

// Round-robin interleave: out[x * t + i] = words[i][x].
CyclicWord interleave_words(std::span<const CyclicWord> words);

using RotationTuple = std::vector<std::size_t>;

// For every source tuple (ascending, first index most significant) and every
// rotation tuple (in the given order) interleave the rotated representatives.
std::vector<CyclicWord> interleave_serial(std::span<const CyclicWord> reps, std::size_t t,
                                          std::span<const RotationTuple> rotations);
std::vector<CyclicWord> interleave_parallel(std::span<const CyclicWord> reps, std::size_t t,
                                            std::span<const RotationTuple> rotations);

}  // namespace ebug::kernels

#endif  // EBUG_KERNELS_HPP_
