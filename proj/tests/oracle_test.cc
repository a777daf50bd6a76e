// Copyright 2026 The alphami Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Checks of the brute-force reference code itself.
#include "oracle/oracle.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "alphami/instances.h"

namespace alphami {
namespace {

TEST(OracleTest, NaiveRenyiKnownValues) {
  const std::vector<double> p = {0.5, 0.5};
  const std::vector<double> q = {0.25, 0.75};
  // sum p^2 / q = 1 + 1/3.
  EXPECT_NEAR(oracle::NaiveRenyi(p, q, 2.0), std::log(4.0 / 3.0), 1e-15);
  EXPECT_NEAR(oracle::NaiveRenyi(p, q, 1.0),
              0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0), 1e-15);
}

TEST(OracleTest, SimplexMinimizerFindsKnownOptimum) {
  const auto quad2 = [](const std::vector<double>& v) {
    return (v[0] - 0.3137) * (v[0] - 0.3137);
  };
  EXPECT_NEAR(oracle::MinimizeOverSimplex(quad2, 2), 0.0, 1e-12);
  const auto quad3 = [](const std::vector<double>& v) {
    return std::pow(v[0] - 0.123, 2) + std::pow(v[1] - 0.456, 2);
  };
  EXPECT_NEAR(oracle::MinimizeOverSimplex(quad3, 3), 0.0, 1e-12);
  // Optimum on the boundary.
  const auto lin = [](const std::vector<double>& v) { return v[1]; };
  EXPECT_EQ(oracle::MinimizeOverSimplex(lin, 3), 0.0);
}

TEST(OracleTest, EnumerationConservesMass) {
  std::mt19937_64 rng(80);
  const Joint3 j = RandomJoint3(rng, 2, 2, 2);
  const oracle::EnumeratedErrors e = oracle::EnumerateErrors(j, -1e9, 3, {0.4, 0.6});
  EXPECT_EQ(e.p1, 0.0);
  EXPECT_NEAR(e.p2, 1.0, 1e-12);
}

}  // namespace
}  // namespace alphami
