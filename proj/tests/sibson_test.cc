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
#include "alphami/sibson.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "alphami/divergence.h"
#include "alphami/error.h"
#include "alphami/instances.h"
#include "oracle/oracle.h"

namespace alphami {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(SibsonTest, ReferenceValues) {
  const Joint3 r = ReferenceJoint();
  EXPECT_NEAR(CondSibsonZ(r, Alpha::Finite(2.0)).value_nats,
              2.0 * std::log((std::sqrt(2.0) + 1.0) / 2.0), 1e-12);
  EXPECT_NEAR(CondSibsonYGivenZ(r, Alpha::Finite(2.0)).value_nats, std::log(1.5), 1e-12);
  EXPECT_NEAR(CondSibsonZ(r, Alpha::Finite(0.5)).value_nats, -std::log(0.75), 1e-12);
  EXPECT_NEAR(ConditionalMutualInformation(r), 0.5 * std::log(2.0), 1e-15);
  EXPECT_NEAR(CondSibsonZ(r, Alpha::One()).value_nats, 0.5 * std::log(2.0), 1e-15);
  EXPECT_NEAR(CondSibsonZ(r, Alpha::Infinity()).value_nats, std::log(1.5), 1e-15);
  EXPECT_NEAR(CondMaximalLeakage(r), std::log(2.0), 1e-15);
}

TEST(SibsonTest, ReferenceOptimizers) {
  const Joint3 r = ReferenceJoint();
  const MiReport z = CondSibsonZ(r, Alpha::Finite(2.0));
  ASSERT_TRUE(std::holds_alternative<Pmf>(z.optimizer));
  const Pmf& qz = std::get<Pmf>(z.optimizer);
  // Q_Z proportional to P_Z S_z^(1/2) with S = (2, 1).
  EXPECT_NEAR(qz[0], std::sqrt(2.0) / (std::sqrt(2.0) + 1.0), 1e-12);
  const MiReport y = CondSibsonYGivenZ(r, Alpha::Finite(2.0));
  ASSERT_TRUE(std::holds_alternative<Kernel>(y.optimizer));
  EXPECT_NEAR(std::get<Kernel>(y.optimizer)(0, 0), 0.5, 1e-12);
}

TEST(SibsonTest, OptimizerAttainsTheValue) {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 30; ++t) {
    const Joint3 j = RandomJoint3(rng, 3, 2, 2, 0.1);
    for (double a : {0.5, 2.0, 4.0}) {
      const MiReport z = CondSibsonZ(j, Alpha::Finite(a));
      const Pmf& qz = std::get<Pmf>(z.optimizer);
      const Joint3 ref = MarkovProductWith(j, qz.probs());
      EXPECT_NEAR(RenyiDivergence(j.probs(), ref.probs(), Alpha::Finite(a)), z.value_nats,
                  1e-11);
      const MiReport y = CondSibsonYGivenZ(j, Alpha::Finite(a));
      const Joint3 ref_y = MarkovProductWithYKernel(j, std::get<Kernel>(y.optimizer));
      EXPECT_NEAR(RenyiDivergence(j.probs(), ref_y.probs(), Alpha::Finite(a)), y.value_nats,
                  1e-11);
    }
  }
}

TEST(SibsonTest, AgreesWithSimplexSearch) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const Joint3 j = RandomJoint3(rng, t % 2 ? 3 : 2, 2, 2);
    for (double a : {0.5, 1.5, 2.0, 4.0}) {
      EXPECT_NEAR(CondSibsonZ(j, Alpha::Finite(a)).value_nats, oracle::CondSibsonZ(j, a), 1e-7);
      EXPECT_NEAR(CondSibsonYGivenZ(j, Alpha::Finite(a)).value_nats,
                  oracle::CondSibsonYGivenZ(j, a), 1e-7);
    }
  }
}

TEST(SibsonTest, ThreeValuedZAgreesWithPatternSearch) {
  std::mt19937_64 rng(22);
  const Joint3 j = RandomJoint3(rng, 2, 2, 3);
  for (double a : {0.5, 2.0}) {
    EXPECT_NEAR(CondSibsonZ(j, Alpha::Finite(a)).value_nats, oracle::CondSibsonZ(j, a), 1e-7);
  }
}

TEST(SibsonTest, UnconditionalAgreesWithSimplexSearch) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    const Joint2 xy = Joint2::FromProbs(3, 2, RandomSimplexPoint(rng, 6));
    for (double a : {0.5, 3.0}) {
      EXPECT_NEAR(SibsonMi(xy, Alpha::Finite(a)).value_nats, oracle::SibsonMi(xy, a), 1e-7);
    }
  }
}

TEST(SibsonTest, SymmetricInXAndY) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    const Joint3 j = RandomJoint3(rng, 3, 2, 2, 0.2);
    for (Alpha a : {Alpha::Finite(0.5), Alpha::One(), Alpha::Finite(2.0), Alpha::Infinity()}) {
      const double lhs = CondSibsonZ(j, a).value_nats;
      const double rhs = CondSibsonZ(SwapXY(j), a).value_nats;
      if (lhs == kInf) {
        EXPECT_EQ(rhs, kInf);
      } else {
        EXPECT_NEAR(lhs, rhs, 1e-12);
      }
    }
  }
}

TEST(SibsonTest, NonnegativeAndZeroOnMarkovChains) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 30; ++t) {
    const Joint3 j = RandomJoint3(rng, 2, 3, 2, 0.2);
    const Joint3 m = RandomMarkovJoint3(rng, 2, 3, 2);
    for (Alpha a : {Alpha::Finite(0.5), Alpha::One(), Alpha::Finite(2.0), Alpha::Infinity()}) {
      EXPECT_GE(CondSibsonZ(j, a).value_nats, 0.0);
      EXPECT_GE(CondSibsonYGivenZ(j, a).value_nats, 0.0);
      EXPECT_NEAR(CondSibsonZ(m, a).value_nats, 0.0, 1e-12);
      EXPECT_NEAR(CondSibsonYGivenZ(m, a).value_nats, 0.0, 1e-12);
    }
  }
}

TEST(SibsonTest, ConstantZReductions) {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 30; ++t) {
    const Joint2 xy = Joint2::FromProbs(3, 2, RandomSimplexPoint(rng, 6, 0.15));
    const Joint3 j = WithConstantZ(xy);
    for (Alpha a : {Alpha::Finite(0.5), Alpha::One(), Alpha::Finite(2.0), Alpha::Infinity()}) {
      EXPECT_NEAR(CondSibsonYGivenZ(j, a).value_nats, SibsonMi(xy, a).value_nats, 1e-9);
      EXPECT_NEAR(CondSibsonZ(j, a).value_nats, ProductDivergence(xy, a), 1e-9);
    }
  }
}

TEST(SibsonTest, LimitsInTheOrder) {
  std::mt19937_64 rng(27);
  for (int t = 0; t < 20; ++t) {
    const Joint3 j = RandomJoint3(rng, 3, 2, 2);
    const double cmi = ConditionalMutualInformation(j);
    EXPECT_NEAR(CondSibsonZ(j, Alpha::Finite(1.0 + 1e-4)).value_nats, cmi, 1e-3);
    EXPECT_NEAR(CondSibsonZ(j, Alpha::Finite(1.0 - 1e-4)).value_nats, cmi, 1e-3);
    EXPECT_NEAR(CondSibsonYGivenZ(j, Alpha::Finite(1e4)).value_nats, CondMaximalLeakage(j),
                1e-3);
    EXPECT_NEAR(CondSibsonYGivenZ(j, Alpha::Infinity()).value_nats, CondMaximalLeakage(j),
                1e-15);
  }
}

TEST(SibsonTest, UnconditionalLimits) {
  std::mt19937_64 rng(28);
  const Joint2 xy = Joint2::FromProbs(2, 3, RandomSimplexPoint(rng, 6));
  EXPECT_NEAR(SibsonMi(xy, Alpha::One()).value_nats, MutualInformation(xy), 1e-15);
  EXPECT_NEAR(SibsonMi(xy, Alpha::Finite(1e4)).value_nats, MaximalLeakage(xy), 1e-3);
  EXPECT_NEAR(SibsonMi(xy, Alpha::Infinity()).value_nats, MaximalLeakage(xy), 1e-15);
}

TEST(SibsonTest, InfoRadiusMatchesSearch) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    std::vector<Pmf> measures;
    std::vector<std::vector<double>> raw;
    for (int i = 0; i < 3; ++i) {
      raw.push_back(RandomSimplexPoint(rng, 3));
      measures.emplace_back(IndexLabels(3), raw.back());
    }
    const std::vector<double> w = RandomSimplexPoint(rng, 3);
    for (double a : {1.5, 3.0}) {
      EXPECT_NEAR(InfoRadius(measures, w, Alpha::Finite(a)), oracle::InfoRadius(raw, w, a),
                  1e-7);
    }
  }
}

TEST(SibsonTest, InfoRadiusRejectsOrdersAtMostOne) {
  const std::vector<Pmf> m = {Pmf::Uniform(2)};
  const std::vector<double> w = {1.0};
  EXPECT_THROW(InfoRadius(m, w, Alpha::Finite(0.5)), Error);
  EXPECT_THROW(InfoRadius(m, w, Alpha::One()), Error);
}

TEST(SibsonTest, ExpectationRepresentations) {
  std::mt19937_64 rng(30);
  for (int t = 0; t < 50; ++t) {
    const Joint3 j = RandomJoint3(rng, 2, 3, 2, 0.1);
    for (double a : {1.5, 2.0, 6.0}) EXPECT_LE(LmgfRepresentationOf(j, a).MaxGap(), 1e-9);
  }
}

TEST(SibsonTest, Additivity) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 5; ++t) {
    const Joint3 j = RandomJoint3(rng, 2, 2, 2);
    for (Alpha a : {Alpha::Finite(0.5), Alpha::Finite(2.0)}) {
      for (int n : {1, 2, 3}) {
        const AdditivityCheck c = AdditivityCheckOf(j, a, n);
        EXPECT_NEAR(c.tensorized, c.scaled, 1e-8);
      }
    }
  }
}

}  // namespace
}  // namespace alphami
