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
#include "alphami/sdpi.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "alphami/divergence.h"
#include "alphami/error.h"
#include "alphami/instances.h"

namespace alphami {
namespace {

ContractionSearchOptions Options(Execution mode, uint64_t seed = 0, int budget = 2000) {
  ContractionSearchOptions o;
  o.budget = budget;
  o.seed = seed;
  o.execution = mode;
  return o;
}

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(SdpiTest, SerialAndParallelAgreeBitForBit) {
  std::mt19937_64 rng(50);
  for (int t = 0; t < 5; ++t) {
    const Kernel k = RandomKernel(rng, 3, 3);
    const ContractionEstimate s = ContractionSearch(k, 2.0, Options(Execution::kSerial, t));
    const ContractionEstimate p = ContractionSearch(k, 2.0, Options(Execution::kParallel, t));
    EXPECT_TRUE(SameBits(s.eta_normalized, p.eta_normalized));
    EXPECT_TRUE(SameBits(s.eta_ratio_lower, p.eta_ratio_lower));
    EXPECT_EQ(s.normalized_witness.mu, p.normalized_witness.mu);
    EXPECT_EQ(s.ratio_witness.nu, p.ratio_witness.nu);
  }
}

TEST(SdpiTest, DeterministicInSeed) {
  std::mt19937_64 rng(51);
  const Kernel k = RandomKernel(rng, 4, 2);
  const ContractionEstimate a = ContractionSearch(k, 3.0, Options(Execution::kParallel, 9));
  const ContractionEstimate b = ContractionSearch(k, 3.0, Options(Execution::kParallel, 9));
  EXPECT_TRUE(SameBits(a.eta_normalized, b.eta_normalized));
}

TEST(SdpiTest, ConstantKernelDestroysEverything) {
  const std::vector<double> row = {0.3, 0.7};
  const ContractionEstimate e =
      ContractionSearch(Kernel::Constant(3, row), 2.0, Options(Execution::kParallel));
  EXPECT_LE(e.eta_normalized, 1e-9);
}

TEST(SdpiTest, IdentityKernelKeepsEverything) {
  const ContractionEstimate e =
      ContractionSearch(Kernel::Identity(3), 2.0, Options(Execution::kParallel));
  EXPECT_NEAR(e.eta_normalized, 1.0, 1e-12);
  EXPECT_NEAR(e.eta_ratio_lower, 1.0, 1e-12);
}

TEST(SdpiTest, EstimatesStayInTheUnitInterval) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 10; ++t) {
    const Kernel k = RandomKernel(rng, 3, 3, 0.2);
    const ContractionEstimate e = ContractionSearch(k, 1.5, Options(Execution::kParallel, t, 500));
    EXPECT_GE(e.eta_normalized, 0.0);
    EXPECT_LE(e.eta_normalized, 1.0 + 1e-12);
    EXPECT_GT(e.eta_ratio_lower, 0.0);
    EXPECT_LE(e.eta_ratio_lower, 1.0 + 1e-12);
    // The witness reproduces the reported value.
    EXPECT_EQ(NormalizedContraction(k, e.normalized_witness, 1.5), e.eta_normalized);
  }
}

TEST(SdpiTest, RatioApproachesOneNearTheDiagonal) {
  std::mt19937_64 rng(53);
  const Kernel k = RandomKernel(rng, 3, 3);
  MeasurePair near;
  near.nu = {0.3, 0.3, 0.4};
  near.mu = {0.3 + 1e-6, 0.3 - 1e-6, 0.4};
  EXPECT_NEAR(HellingerRatio(k, near, 2.0), 1.0, 1e-9);
  MeasurePair same{near.nu, near.nu};
  EXPECT_EQ(HellingerRatio(k, same, 2.0), -std::numeric_limits<double>::infinity());
}

TEST(SdpiTest, UnreachableInputsAreIgnored) {
  const Kernel k(IndexLabels(3), IndexLabels(2), {1.0, 0.0, 0.5, 0.5, 0.0, 1.0},
                 {true, false, true});
  const ContractionEstimate e = ContractionSearch(k, 2.0, Options(Execution::kSerial));
  EXPECT_EQ(e.normalized_witness.mu[1], 0.0);
  EXPECT_EQ(e.normalized_witness.nu[1], 0.0);
  EXPECT_NEAR(e.eta_normalized, 1.0, 1e-12);
}

TEST(SdpiTest, Preconditions) {
  EXPECT_THROW(ContractionSearch(Kernel::Identity(2), 0.5, Options(Execution::kSerial)), Error);
  EXPECT_THROW(ContractionSearch(Kernel::Identity(1), 2.0, Options(Execution::kSerial)), Error);
  EXPECT_THROW(ContractionSearch(Kernel::Identity(2), 2.0, Options(Execution::kSerial, 0, 0)),
               Error);
}

TEST(SdpiTest, ConditionalCheckOnMarkovChains) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 30; ++t) {
    const Joint4 j4 = RandomMarkovJoint4(rng, 2, 2, 2, 2);
    for (double a : {1.5, 2.0, 4.0}) {
      const ContractionEstimate e =
          ContractionSearch(ChannelYGivenX(j4), a, Options(Execution::kParallel, t, 300));
      const SdpiCheck c = SdpiConditionalCheck(j4, a, e);
      EXPECT_TRUE(c.holds) << c.lhs << " > " << c.rhs;
    }
  }
}

TEST(SdpiTest, UnconditionalCheck) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 30; ++t) {
    const Joint2 xy = Joint2::FromProbs(3, 2, RandomSimplexPoint(rng, 6));
    const Kernel w = RandomKernel(rng, 3, 3);
    const ContractionEstimate e = ContractionSearch(w, 2.0, Options(Execution::kParallel, t, 300));
    EXPECT_TRUE(SdpiUnconditionalCheck(xy, w, 2.0, e).holds);
  }
}

TEST(SdpiTest, HellingerDataProcessing) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 2000; ++t) {
    const Kernel k = RandomKernel(rng, 3, 4, 0.2);
    const std::vector<double> mu = RandomSimplexPoint(rng, 3, 0.2);
    const std::vector<double> nu = RandomSimplexPoint(rng, 3);
    const double a = 1.0 + 9.0 * std::uniform_real_distribution<double>()(rng);
    const double in = HellingerIntegral(mu, nu, a);
    EXPECT_LE(HellingerIntegral(k.Apply(mu), k.Apply(nu), a), in + 1e-12 * std::max(1.0, in));
  }
}

}  // namespace
}  // namespace alphami
