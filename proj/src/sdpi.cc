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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <utility>

#include "alphami/divergence.h"
#include "alphami/error.h"
#include "alphami/sibson.h"

namespace alphami {
namespace {

constexpr double kUndefined = -std::numeric_limits<double>::infinity();

// Pairs closer than this (in input excess) are treated as identical: the
// ratio of two excesses is rounding noise there.
constexpr double kMinInputExcess = 1e-10;

// Stream ids for ItemEngine.
constexpr uint64_t kPairStream = 1;

struct Excesses {
  double in = 0.0;   // H(mu || nu) - 1
  double out = 0.0;  // H(K mu || K nu) - 1
};

Excesses ExcessesOf(const Kernel& k, const MeasurePair& pair, double alpha) {
  std::vector<double> d(pair.mu.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = pair.mu[i] - pair.nu[i];
  Excesses e;
  e.in = HellingerExcessFromDelta(pair.nu, d, alpha);
  e.out = HellingerExcessFromDelta(k.Apply(pair.nu),
                                   k.ApplyDifference(pair.mu, pair.nu), alpha);
  return e;
}

// Uniform sample from the simplex over `support`, zero elsewhere.
std::vector<double> SampleSimplex(std::mt19937_64& rng,
                                  const std::vector<std::size_t>& support,
                                  std::size_t n) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> v(n, 0.0);
  double total = 0.0;
  for (std::size_t i : support) {
    v[i] = expo(rng);
    total += v[i];
  }
  for (std::size_t i : support) v[i] /= total;
  return v;
}

using Functional = double (*)(const Kernel&, const MeasurePair&, double);

// Strictly better value, or equal value at a smaller index.
bool Better(double value, std::size_t index, double best_value, std::size_t best_index) {
  if (value != best_value) return value > best_value;
  return index < best_index;
}

// Moves mass between pairs of support coordinates of mu or nu while the
// functional improves, halving the step when a sweep makes no progress.
std::pair<double, MeasurePair> Ascend(const Kernel& k, double alpha, Functional f,
                                      MeasurePair start,
                                      const std::vector<std::size_t>& support,
                                      int sweeps) {
  double best = f(k, start, alpha);
  double step = 0.05;
  for (int s = 0; s < sweeps && step > 1e-12; ++s) {
    bool improved = false;
    for (int which = 0; which < 2; ++which) {
      for (std::size_t i : support) {
        for (std::size_t j : support) {
          if (i == j) continue;
          MeasurePair trial = start;
          std::vector<double>& v = which == 0 ? trial.mu : trial.nu;
          const double amount = std::min(step, v[j]);
          if (amount <= 0.0) continue;
          v[i] += amount;
          v[j] -= amount;
          const double value = f(k, trial, alpha);
          if (value > best) {
            best = value;
            start = std::move(trial);
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {best, std::move(start)};
}

struct AscentResult {
  double value = kUndefined;
  MeasurePair pair;
};

AscentResult RefineTop(const Kernel& k, double alpha, Functional f,
                       const std::vector<MeasurePair>& pairs,
                       const std::vector<double>& scores,
                       const std::vector<std::size_t>& support,
                       const ContractionSearchOptions& options) {
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t top = std::min<std::size_t>(
      static_cast<std::size_t>(std::max(options.ascent_starts, 0)), order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      return Better(scores[a], a, scores[b], b);
                    });

  // The best random pair is a candidate even without refinement.
  AscentResult best;
  std::size_t best_rank = 0;
  if (!order.empty()) {
    best.value = scores[order[0]];
    best.pair = pairs[order[0]];
  }
  std::vector<AscentResult> refined(top);
  const auto refine_one = [&](std::size_t r) {
    auto [value, pair] = Ascend(k, alpha, f, pairs[order[r]], support,
                                options.ascent_sweeps);
    refined[r] = AscentResult{value, std::move(pair)};
  };
  if (options.execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(top); ++r) {
      refine_one(static_cast<std::size_t>(r));
    }
  } else {
    for (std::size_t r = 0; r < top; ++r) refine_one(r);
  }
  // Ranks are offset by one so that the unrefined candidate wins ties.
  for (std::size_t r = 0; r < top; ++r) {
    if (Better(refined[r].value, r + 1, best.value, best_rank)) {
      best = refined[r];
      best_rank = r + 1;
    }
  }
  return best;
}

}  // namespace

double NormalizedContraction(const Kernel& k, const MeasurePair& pair, double alpha) {
  const Excesses e = ExcessesOf(k, pair, alpha);
  if (!(e.in > kMinInputExcess)) return kUndefined;
  if (std::isinf(e.in)) return std::isinf(e.out) ? kUndefined : 0.0;
  return std::max(e.out, 0.0) / e.in;
}

double HellingerRatio(const Kernel& k, const MeasurePair& pair, double alpha) {
  const Excesses e = ExcessesOf(k, pair, alpha);
  if (!(e.in > 0.0)) return kUndefined;
  if (std::isinf(e.in)) return std::isinf(e.out) ? kUndefined : 0.0;
  return (1.0 + e.out) / (1.0 + e.in);
}

ContractionEstimate ContractionSearch(const Kernel& k, double alpha,
                                      const ContractionSearchOptions& options) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::kPrecondition,
                "contraction search requires a finite order above 1");
  }
  if (options.budget < 1) {
    throw Error(ErrorKind::kValidation, "contraction search budget must be >= 1");
  }
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < k.in_size(); ++i) {
    if (k.reachable(i)) support.push_back(i);
  }
  if (support.size() < 2) {
    throw Error(ErrorKind::kPrecondition,
                "contraction search needs at least two reachable inputs");
  }

  const std::size_t budget = static_cast<std::size_t>(options.budget);
  std::vector<MeasurePair> pairs(budget);
  std::vector<double> normalized(budget, kUndefined);
  std::vector<double> ratio(budget, kUndefined);
  const auto evaluate = [&](std::size_t i) {
    std::mt19937_64 rng = ItemEngine(options.seed, kPairStream, i);
    MeasurePair pair;
    pair.mu = SampleSimplex(rng, support, k.in_size());
    pair.nu = SampleSimplex(rng, support, k.in_size());
    normalized[i] = NormalizedContraction(k, pair, alpha);
    ratio[i] = HellingerRatio(k, pair, alpha);
    pairs[i] = std::move(pair);
  };
  if (options.execution == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(budget); ++i) {
      evaluate(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < budget; ++i) evaluate(i);
  }

  const AscentResult best_normalized = RefineTop(
      k, alpha, &NormalizedContraction, pairs, normalized, support, options);
  const AscentResult best_ratio =
      RefineTop(k, alpha, &HellingerRatio, pairs, ratio, support, options);

  ContractionEstimate est;
  est.eta_normalized = std::max(best_normalized.value, 0.0);
  est.normalized_witness = best_normalized.pair;
  est.eta_ratio_lower = std::max(best_ratio.value, 0.0);
  est.ratio_witness = best_ratio.pair;
  return est;
}

namespace {

double LogEta(const ContractionEstimate& est, double alpha) {
  if (!(est.eta_ratio_lower > 0.0)) {
    throw Error(ErrorKind::kPrecondition, "contraction estimate is not positive");
  }
  return std::log(est.eta_ratio_lower) / (alpha - 1.0);
}

}  // namespace

SdpiCheck SdpiConditionalCheck(const Joint4& j4, double alpha,
                               const ContractionEstimate& est) {
  if (MarkovDeviation(j4) > 1e-10) {
    throw Error(ErrorKind::kPrecondition, "(Z, W) - X - Y is not a Markov chain");
  }
  const Alpha order = Alpha::Finite(alpha);
  SdpiCheck check;
  check.lhs = CondSibsonZ(MarginalWYZ(j4), order).value_nats;
  check.rhs = LogEta(est, alpha) + CondSibsonZ(MarginalWXZ(j4), order).value_nats;
  check.holds = check.lhs <= check.rhs + 1e-9;
  return check;
}

SdpiCheck SdpiUnconditionalCheck(const Joint2& xy, const Kernel& w_given_x,
                                 double alpha, const ContractionEstimate& est) {
  const Alpha order = Alpha::Finite(alpha);
  const Joint2 wy = PushFirstThroughChannel(xy, w_given_x);
  SdpiCheck check;
  check.lhs = SibsonMi(wy, order).value_nats;
  check.rhs = LogEta(est, alpha) + SibsonMi(xy, order).value_nats;
  check.holds = check.lhs <= check.rhs + 1e-9;
  return check;
}

}  // namespace alphami
