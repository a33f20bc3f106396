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

#include <gtest/gtest.h>

#include "properties.hpp"

namespace ebug::testing {
namespace {

TEST(Properties, InterleaveRotationIdentity) {
  std::mt19937_64 rng(20260101);
  EXPECT_EQ(check_rotation_identity(rng, 400), 0U);
}

TEST(Properties, ValidityAgreesWithQuadraticOracle) {
  std::mt19937_64 rng(20260102);
  EXPECT_EQ(check_validity_oracle(rng, 400), 0U);
}

TEST(Properties, ProductAndInterleavePreserveOptimality) {
  std::mt19937_64 rng(20260103);
  EXPECT_EQ(check_optimality_preservation(rng, 200), 0U);
}

TEST(Properties, PoolIsOptimal) {
  for (const auto& c : optimal_pool()) EXPECT_TRUE(optimal(c));
}

}  // namespace
}  // namespace ebug::testing
