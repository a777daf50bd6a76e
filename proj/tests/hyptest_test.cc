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
#include "alphami/hyptest.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "alphami/error.h"
#include "alphami/instances.h"
#include "alphami/sibson.h"
#include "oracle/oracle.h"

namespace alphami {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLog2 = std::log(2.0);

TEST(HyptestTest, TrivialThresholds) {
  const Joint3 r = ReferenceJoint();
  const ErrorReport accept = ExactErrors(r, {-kInf, 3});
  EXPECT_EQ(accept.p1, 0.0);
  EXPECT_EQ(accept.p2_worst, 1.0);
  const ErrorReport reject = ExactErrors(r, {kInf, 3});
  EXPECT_EQ(reject.p1, 1.0);
  EXPECT_EQ(reject.p2_worst, 0.0);
  EXPECT_EQ(reject.rate_r, kInf);
  const ErrorReport mc = MonteCarloErrors(r, {-kInf, 3}, {{0.5, 0.5}}, 100, 1);
  EXPECT_EQ(mc.p1, 0.0);
}

TEST(HyptestTest, ReferenceScores) {
  const Joint3 r = ReferenceJoint();
  const std::vector<double> s = ScoreTable(r);
  EXPECT_NEAR(s[r.Index(0, 0, 0)], kLog2, 1e-15);
  EXPECT_EQ(s[r.Index(0, 1, 0)], -kInf);
  EXPECT_NEAR(s[r.Index(0, 1, 1)], 0.0, 1e-15);
  EXPECT_EQ(ExactTypeOneError(r, {0.0, 1}), 0.0);
  EXPECT_EQ(oracle::EnumerateErrors(r, 0.0, 1, {0.5, 0.5}).p1, 0.0);
}

TEST(HyptestTest, DynamicProgramMatchesEnumeration) {
  std::mt19937_64 rng(60);
  for (int t = 0; t < 20; ++t) {
    const Joint3 j = RandomJoint3(rng, 2, 2, 2, 0.25);
    const double tau = std::uniform_real_distribution<double>(-0.3, 0.3)(rng);
    const std::vector<double> qz = RandomSimplexPoint(rng, 2);
    const Pmf pz = Marginal(j, Axis::kZ);
    if (pz[0] == 0.0 || pz[1] == 0.0) continue;
    for (int n : {1, 2, 3}) {
      const oracle::EnumeratedErrors o = oracle::EnumerateErrors(j, tau, n, qz);
      EXPECT_NEAR(ExactTypeOneError(j, {tau, n}), o.p1, 1e-12);
      EXPECT_NEAR(ExactTypeTwoError(j, {tau, n}, qz), o.p2, 1e-12);
    }
  }
}

TEST(HyptestTest, SerialAndParallelAgree) {
  std::mt19937_64 rng(61);
  const Joint3 j = RandomJoint3(rng, 2, 2, 3);
  const ErrorReport s = ExactErrors(j, {0.05, 3}, 0.05, Execution::kSerial);
  const ErrorReport p = ExactErrors(j, {0.05, 3}, 0.05, Execution::kParallel);
  EXPECT_EQ(s.p2, p.p2);
  EXPECT_EQ(s.worst_qz, p.worst_qz);
  const std::vector<std::vector<double>> qz = {{0.2, 0.3, 0.5}};
  const ErrorReport ms = MonteCarloErrors(j, {0.05, 3}, qz, 5000, 4, Execution::kSerial);
  const ErrorReport mp = MonteCarloErrors(j, {0.05, 3}, qz, 5000, 4, Execution::kParallel);
  EXPECT_EQ(ms.p1, mp.p1);
  EXPECT_EQ(ms.p2, mp.p2);
}

TEST(HyptestTest, WorstAlternativeDominatesTheMarginal) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 10; ++t) {
    const Joint3 j = RandomJoint3(rng, 2, 2, 2);
    const ErrorReport e = ExactErrors(j, {0.02, 2}, 0.05);
    ASSERT_EQ(e.grid_points, 22u);
    EXPECT_GE(e.p2_worst, e.p2.back());
    const Pmf pz = Marginal(j, Axis::kZ);
    EXPECT_NEAR(e.p2.back(), ExactTypeTwoError(j, {0.02, 2}, {pz[0], pz[1]}), 1e-15);
  }
}

TEST(HyptestTest, ThresholdMonotonicity) {
  std::mt19937_64 rng(63);
  const Joint3 j = RandomJoint3(rng, 2, 3, 2, 0.1);
  double last_p1 = -1.0;
  std::vector<double> last_p2;
  for (double tau = -1.0; tau <= 1.0; tau += 0.125) {
    const ErrorReport e = ExactErrors(j, {tau, 2}, 0.1, Execution::kSerial);
    EXPECT_GE(e.p1, last_p1 - 1e-15);
    if (!last_p2.empty()) {
      for (std::size_t g = 0; g < e.p2.size(); ++g) EXPECT_LE(e.p2[g], last_p2[g] + 1e-15);
    }
    last_p1 = e.p1;
    last_p2 = e.p2;
  }
}

TEST(HyptestTest, MonteCarloAgreesWithExact) {
  const Joint3 r = ReferenceJoint();
  const ThresholdTest test{0.2, 4};
  const std::vector<std::vector<double>> qz = {{0.5, 0.5}, {0.9, 0.1}};
  const ErrorReport mc = MonteCarloErrors(r, test, qz, 20000, 5);
  const double p1 = ExactTypeOneError(r, test);
  EXPECT_LE(std::abs(mc.p1 - p1), 3.0 * 1.96 * std::sqrt(p1 * (1 - p1) / 20000) + 1e-12);
  for (std::size_t q = 0; q < qz.size(); ++q) {
    const double p2 = ExactTypeTwoError(r, test, qz[q]);
    EXPECT_LE(std::abs(mc.p2[q] - p2), 3.0 * 1.96 * std::sqrt(p2 * (1 - p2) / 20000) + 1e-12);
  }
}

TEST(HyptestTest, MonteCarloIsDeterministic) {
  const Joint3 r = ReferenceJoint();
  const std::vector<std::vector<double>> qz = {{0.5, 0.5}};
  const ErrorReport a = MonteCarloErrors(r, {0.1, 5}, qz, 3000, 77);
  const ErrorReport b = MonteCarloErrors(r, {0.1, 5}, qz, 3000, 77);
  EXPECT_EQ(a.p1, b.p1);
  EXPECT_EQ(a.p2, b.p2);
  const ErrorReport c = MonteCarloErrors(r, {0.1, 5}, qz, 3000, 78);
  EXPECT_TRUE(a.p1 != c.p1 || a.p2 != c.p2);
}

TEST(HyptestTest, BoundOnReferenceJoint) {
  const Joint3 r = ReferenceJoint();
  for (int n = 1; n <= 8; ++n) {
    for (double a : {1.5, 2.0, 4.0, 16.0}) {
      const Theorem6Report t = CheckTheorem6(r, {kLog2, n}, a);
      EXPECT_TRUE(t.certified);
      EXPECT_NEAR(t.grid_rate, kLog2, 1e-12);
      EXPECT_GT(t.claimed_rate, CondSibsonZ(r, Alpha::Finite(a)).value_nats);
      EXPECT_TRUE(t.holds) << n << " " << a;
      EXPECT_NEAR(t.lhs, std::pow(0.5, n), 1e-15);
    }
  }
}

TEST(HyptestTest, BoundIsVacuousBelowTheInformation) {
  const Joint3 r = ReferenceJoint();
  const Theorem6Report t = CheckTheorem6(r, {kLog2, 3}, 2.0, 0.01, 0.2);
  EXPECT_TRUE(t.certified);
  EXPECT_GE(t.rhs, 1.0);
  EXPECT_TRUE(t.holds);
}

TEST(HyptestTest, UncertifiedPremise) {
  const Joint3 r = ReferenceJoint();
  // Accepting whenever no x != y appears under z = 0: Q_Z = (0, 1) always
  // accepts, so no positive rate holds.
  const Theorem6Report t = CheckTheorem6(r, {0.0, 3}, 2.0);
  EXPECT_EQ(t.grid_rate, 0.0);
  EXPECT_FALSE(t.certified);
  const Theorem6Report over = CheckTheorem6(r, {kLog2, 3}, 2.0, 0.01, 0.7);
  EXPECT_FALSE(over.certified);
}

TEST(HyptestTest, MarkovJoint) {
  const Joint3 m = ReferenceMarkovJoint();
  for (int n = 1; n <= 8; ++n) {
    const Theorem6Report pos = CheckTheorem6(m, {0.1, n}, 2.0);
    EXPECT_TRUE(pos.certified);
    EXPECT_EQ(pos.lhs, 0.0);
    EXPECT_TRUE(pos.holds);
    const Theorem6Report zero = CheckTheorem6(m, {0.0, n}, 2.0);
    EXPECT_FALSE(zero.certified);
  }
}

TEST(HyptestTest, TensorizationConsistency) {
  std::mt19937_64 rng(64);
  const Joint3 j = RandomJoint3(rng, 2, 2, 2);
  for (int n : {1, 2, 3}) {
    const double scaled = n * CondSibsonZ(j, Alpha::Finite(2.0)).value_nats;
    EXPECT_NEAR(AdditivityCheckOf(j, Alpha::Finite(2.0), n).tensorized, scaled, 1e-8);
  }
}

TEST(HyptestTest, SweepBestRowIsTightest) {
  const Joint3 r = ReferenceJoint();
  const std::vector<SweepRow> rows =
      ExponentSweep(r, kLog2, {1.5, 2.0, 4.0, 16.0}, {1, 2, 4}, 0.01, 0.5);
  ASSERT_EQ(rows.size(), 15u);
  for (std::size_t i = 0; i < rows.size(); i += 5) {
    const SweepRow& best = rows[i + 4];
    ASSERT_TRUE(best.best);
    for (std::size_t a = 0; a < 4; ++a) {
      EXPECT_LE(best.bound, rows[i + a].bound);
      EXPECT_TRUE(rows[i + a].certified);
      EXPECT_TRUE(rows[i + a].holds);
      EXPECT_LE(rows[i + a].empirical, rows[i + a].bound + 1e-12);
    }
  }
}

TEST(HyptestTest, SimplexGrid) {
  const auto g = SimplexGrid(4, {0, 2, 3}, 0.1);
  EXPECT_EQ(g.size(), 66u);
  for (const auto& p : g) {
    EXPECT_EQ(p[1], 0.0);
    EXPECT_NEAR(p[0] + p[2] + p[3], 1.0, 1e-15);
  }
  EXPECT_THROW(SimplexGrid(2, {0, 1}, 0.0), Error);
  EXPECT_THROW(SimplexGrid(2, {5}, 0.5), Error);
}

TEST(HyptestTest, StateCap) {
  std::mt19937_64 rng(65);
  const Joint3 j = RandomJoint3(rng, 3, 3, 3);
  try {
    ExactTypeOneError(j, {0.0, 40});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResource);
  }
}

TEST(HyptestTest, AlternativeValidation) {
  const Joint3 j = Joint3::FromProbs(1, 1, 2, {1.0, 0.0});
  EXPECT_THROW(ExactTypeTwoError(j, {0.0, 1}, {0.5, 0.5}), Error);
  EXPECT_THROW(ExactTypeTwoError(j, {0.0, 1}, {0.5}), Error);
  EXPECT_NO_THROW(ExactTypeTwoError(j, {0.0, 1}, {1.0, 0.0}));
  EXPECT_THROW(ExactErrors(j, {0.0, 0}), Error);
}

}  // namespace
}  // namespace alphami
