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
#include "alphami/selftest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "alphami/bounds.h"
#include "alphami/divergence.h"
#include "alphami/execution.h"
#include "alphami/exponents.h"
#include "alphami/hyptest.h"
#include "alphami/instances.h"
#include "alphami/sdpi.h"
#include "alphami/sibson.h"

namespace alphami {
namespace {

const double kOrders[] = {0.5, 1.5, 2.0, 4.0};

class Suite {
 public:
  explicit Suite(uint64_t seed) : seed_(seed) {}

  // Runs `body` for `cases` seeded cases; the body returns its violation.
  void Check(const std::string& name, int cases, double tol,
             const std::function<double(std::mt19937_64&)>& body) {
    SelftestCheck c;
    c.name = name;
    c.cases = cases;
    c.tolerance = tol;
    c.worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < cases; ++i) {
      std::mt19937_64 rng = ItemEngine(seed_, checks_.size(), static_cast<uint64_t>(i));
      const double v = body(rng);
      c.worst = std::isnan(v) ? v : std::max(c.worst, v);
      if (std::isnan(v)) break;
    }
    c.passed = !std::isnan(c.worst) && c.worst <= tol;
    checks_.push_back(c);
  }

  std::vector<SelftestCheck> Take() { return std::move(checks_); }

 private:
  uint64_t seed_;
  std::vector<SelftestCheck> checks_;
};

Joint3 SmallJoint(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(2, 3);
  return RandomJoint3(rng, dim(rng), dim(rng), 2, 0.1);
}

Alpha PickOrder(std::mt19937_64& rng) {
  return Alpha::Finite(kOrders[std::uniform_int_distribution<int>(0, 3)(rng)]);
}

Alpha PickOrderAboveOne(std::mt19937_64& rng) {
  return Alpha::Finite(kOrders[std::uniform_int_distribution<int>(1, 3)(rng)]);
}

}  // namespace

std::vector<SelftestCheck> RunSelftest(uint64_t seed) {
  Suite s(seed);
  const Joint3 r = ReferenceJoint();

  s.Check("reference_values", 1, 1e-9, [&](std::mt19937_64&) {
    const double i2z = CondSibsonZ(r, Alpha::Finite(2.0)).value_nats;
    const double i2y = CondSibsonYGivenZ(r, Alpha::Finite(2.0)).value_nats;
    const double ihalf = CondSibsonZ(r, Alpha::Finite(0.5)).value_nats;
    const double cmi = ConditionalMutualInformation(r);
    return std::max({std::abs(i2z - 2.0 * std::log((std::sqrt(2.0) + 1.0) / 2.0)),
                     std::abs(i2y - std::log(1.5)), std::abs(ihalf + std::log(0.75)),
                     std::abs(cmi - 0.5 * std::log(2.0))});
  });

  s.Check("symmetry_xy", 50, 1e-12, [](std::mt19937_64& rng) {
    const Joint3 j = SmallJoint(rng);
    const Alpha a = PickOrder(rng);
    return std::abs(CondSibsonZ(j, a).value_nats - CondSibsonZ(SwapXY(j), a).value_nats);
  });

  s.Check("nonnegative_and_markov_zero", 50, 1e-12, [](std::mt19937_64& rng) {
    const Joint3 j = SmallJoint(rng);
    const Joint3 m = RandomMarkovJoint3(rng, 2, 3, 2);
    const Alpha a = PickOrder(rng);
    return std::max({-CondSibsonZ(j, a).value_nats, -CondSibsonYGivenZ(j, a).value_nats,
                     std::abs(CondSibsonZ(m, a).value_nats)});
  });

  s.Check("lmgf_representation", 50, 1e-9, [](std::mt19937_64& rng) {
    const Joint3 j = SmallJoint(rng);
    return LmgfRepresentationOf(j, PickOrderAboveOne(rng).value()).MaxGap();
  });

  s.Check("constant_z_reductions", 30, 1e-9, [](std::mt19937_64& rng) {
    const Joint2 xy = Joint2::FromProbs(2, 3, RandomSimplexPoint(rng, 6));
    const Joint3 j = WithConstantZ(xy);
    const Alpha a = PickOrder(rng);
    return std::max(
        std::abs(CondSibsonYGivenZ(j, a).value_nats - SibsonMi(xy, a).value_nats),
        std::abs(CondSibsonZ(j, a).value_nats - ProductDivergence(xy, a)));
  });

  s.Check("thm1_thm3_leakage_bounds", 100, 1e-12, [](std::mt19937_64& rng) {
    const Joint3 j = SmallJoint(rng);
    const EventMask e = RandomEvent(rng, j.nx(), j.ny(), j.nz());
    const Alpha a = PickOrderAboveOne(rng);
    return std::max({-BoundThm1(j, e, a).slack, -BoundThm3(j, e, a).slack,
                     -BoundCorLeakage(j, e).slack});
  });

  s.Check("reference_bounds", 1, 1e-6, [&](std::mt19937_64&) {
    std::vector<char> cells(8, 0);
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t z = 0; z < 2; ++z) cells[r.Index(x, x, z)] = 1;
    }
    const EventMask e(2, 2, 2, cells);
    const BoundReport t3 = BoundThm3(r, e, Alpha::Finite(2.0));
    const BoundReport t1 = BoundThm1(r, e, Alpha::Finite(2.0));
    return std::max({std::abs(t3.lhs - 0.75),
                     std::abs(t3.rhs - (1.0 + std::sqrt(2.0)) / (2.0 * std::sqrt(2.0))),
                     std::abs(t1.rhs - std::sqrt(3.0) / 2.0)});
  });

  s.Check("hellinger_dpi", 500, 1e-12, [](std::mt19937_64& rng) {
    const Kernel k = RandomKernel(rng, 3, 3, 0.2);
    const std::vector<double> mu = RandomSimplexPoint(rng, 3, 0.2);
    const std::vector<double> nu = RandomSimplexPoint(rng, 3);
    const double a = PickOrderAboveOne(rng).value();
    const double in = HellingerIntegral(mu, nu, a);
    const double out = HellingerIntegral(k.Apply(mu), k.Apply(nu), a);
    return (out - in) / std::max(1.0, in);
  });

  s.Check("thm4_sdpi", 10, 1e-9, [](std::mt19937_64& rng) {
    const Joint4 j4 = RandomMarkovJoint4(rng, 2, 2, 2, 2);
    const double a = PickOrderAboveOne(rng).value();
    ContractionSearchOptions opt;
    opt.budget = 500;
    opt.seed = rng();
    const ContractionEstimate est = ContractionSearch(ChannelYGivenX(j4), a, opt);
    const SdpiCheck c = SdpiConditionalCheck(j4, a, est);
    return c.lhs - c.rhs;
  });

  s.Check("tensorization", 10, 1e-8, [](std::mt19937_64& rng) {
    const Joint3 j = RandomJoint3(rng, 2, 2, 2);
    const AdditivityCheck c = AdditivityCheckOf(j, PickOrder(rng), 2);
    return std::abs(c.tensorized - c.scaled);
  });

  s.Check("threshold_monotonicity", 20, 0.0, [](std::mt19937_64& rng) {
    const Joint3 j = RandomJoint3(rng, 2, 2, 2, 0.2);
    const double lo = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    const double hi = lo + 0.25;
    const ErrorReport a = ExactErrors(j, {lo, 3}, 0.05, Execution::kSerial);
    const ErrorReport b = ExactErrors(j, {hi, 3}, 0.05, Execution::kSerial);
    double worst = a.p1 - b.p1 - 1e-12;
    for (std::size_t g = 0; g < a.p2.size(); ++g) {
      worst = std::max(worst, b.p2[g] - a.p2[g] - 1e-12);
    }
    return worst;
  });

  s.Check("theorem6_reference", 1, 1e-9, [&](std::mt19937_64&) {
    double worst = -1.0;
    for (int n = 1; n <= 4; ++n) {
      for (double a : {1.5, 2.0, 4.0}) {
        const Theorem6Report t =
            CheckTheorem6(r, {std::log(2.0), n}, a, 0.01,
                          std::numeric_limits<double>::quiet_NaN(), Execution::kSerial);
        if (!t.certified) return std::numeric_limits<double>::quiet_NaN();
        worst = std::max(worst, t.lhs - t.rhs);
      }
    }
    return worst;
  });

  s.Check("ep_star_convex_nonpositive", 5, 1e-9, [](std::mt19937_64& rng) {
    const Joint3 j = RandomJoint3(rng, 2, 2, 2);
    std::vector<Sample> samples;
    double worst = -1.0;
    for (int i = 0; i < 40; ++i) {
      const double l = -4.0 + 4.0 * i / 39.0;
      const double v = EpStar(j, l);
      worst = std::max(worst, v);
      samples.push_back({l, v});
    }
    return IsConvexAlongGrid(samples, 1e-9) ? worst : 1.0;
  });

  s.Check("ep_star_reference", 1, 1e-6, [&](std::mt19937_64&) {
    return std::abs(EpStar(r, -1.0) + 0.287682072451781);
  });

  return s.Take();
}

}  // namespace alphami
