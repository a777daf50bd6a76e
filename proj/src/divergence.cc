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
#include "alphami/divergence.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "alphami/error.h"

namespace alphami {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireSameLength(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::kShape, "divergence: alphabet mismatch");
  }
}

void RequireFiniteOrder(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha == 1.0) {
    throw Error(ErrorKind::kPrecondition,
                "a finite order different from 1 is required");
  }
}

// phi(t) = (1 + t)^a - 1 - a t for t >= -1.
double Phi(double t, double a) {
  if (std::isinf(t)) return kInf;
  if (std::abs(t) < 1e-3) {
    // Binomial series from the quadratic term on; |t|^7 is below rounding.
    double term = a * (a - 1.0) / 2.0 * t * t;
    double sum = term;
    for (int k = 3; k <= 7; ++k) {
      term *= (a - (k - 1)) / k * t;
      sum += term;
    }
    return sum;
  }
  return std::expm1(a * std::log1p(t)) - a * t;
}

}  // namespace

double LogSumExp(std::span<const double> v) {
  double hi = -kInf;
  for (double x : v) hi = std::max(hi, x);
  if (hi == -kInf) return -kInf;
  if (hi == kInf) return kInf;
  double sum = 0.0;
  for (double x : v) {
    if (x != -kInf) sum += std::exp(x - hi);
  }
  return hi + std::log(sum);
}

double LogHellingerSum(std::span<const double> p, std::span<const double> q,
                       double alpha) {
  RequireSameLength(p, q);
  RequireFiniteOrder(alpha);
  std::vector<double> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) {
      if (alpha > 1.0) return kInf;
      continue;
    }
    terms.push_back(alpha * std::log(p[i]) + (1.0 - alpha) * std::log(q[i]));
  }
  return LogSumExp(terms);
}

double KlDivergence(std::span<const double> p, std::span<const double> q) {
  RequireSameLength(p, q);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    sum += p[i] * std::log(p[i] / q[i]);
  }
  return std::max(sum, 0.0);
}

double MaxDivergence(std::span<const double> p, std::span<const double> q) {
  RequireSameLength(p, q);
  double worst = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    const double r = p[i] / q[i];
    worst = any ? std::max(worst, r) : r;
    any = true;
  }
  return any ? std::max(std::log(worst), 0.0) : 0.0;
}

double RenyiDivergence(std::span<const double> p, std::span<const double> q,
                       Alpha alpha) {
  RequireSameLength(p, q);
  if (alpha.is_one()) return KlDivergence(p, q);
  if (alpha.is_infinity()) return MaxDivergence(p, q);
  const double a = alpha.value();
  const double log_sum = LogHellingerSum(p, q, a);
  if (log_sum == kInf) return kInf;
  // Disjoint supports below order one: the sum vanishes and D is infinite.
  if (log_sum == -kInf) return kInf;
  return std::max(log_sum / (a - 1.0), 0.0);
}

double HellingerIntegral(std::span<const double> p, std::span<const double> q,
                         double alpha) {
  const double log_sum = LogHellingerSum(p, q, alpha);
  return std::exp(log_sum);
}

double HellingerExcessFromDelta(std::span<const double> q,
                                std::span<const double> d, double alpha) {
  RequireSameLength(q, d);
  RequireFiniteOrder(alpha);
  double sum = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] <= 0.0) {
      if (d[i] > 0.0) {
        if (alpha > 1.0) return kInf;
        // q_i (1 + d_i/q_i)^a -> 0 below order one; only -a d_i survives.
        sum += -alpha * d[i];
      }
      continue;
    }
    sum += q[i] * Phi(std::max(d[i] / q[i], -1.0), alpha);
  }
  return sum;
}

double HellingerExcess(std::span<const double> p, std::span<const double> q,
                       double alpha) {
  RequireSameLength(p, q);
  std::vector<double> d(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - q[i];
  return HellingerExcessFromDelta(q, d, alpha);
}

LimitReport RenyiLimitCheck(std::span<const double> p,
                            std::span<const double> q,
                            std::span<const double> eps_grid) {
  LimitReport report;
  report.kl = KlDivergence(p, q);
  for (double eps : eps_grid) {
    if (!(eps > 0.0 && eps < 1.0)) {
      throw Error(ErrorKind::kValidation, "limit check: eps must lie in (0, 1)");
    }
    LimitRow row;
    row.eps = eps;
    row.below = RenyiDivergence(p, q, Alpha::Finite(1.0 - eps));
    row.above = RenyiDivergence(p, q, Alpha::Finite(1.0 + eps));
    row.deviation =
        std::max(std::abs(row.below - report.kl), std::abs(row.above - report.kl));
    report.rows.push_back(row);
  }
  std::vector<LimitRow> sorted = report.rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const LimitRow& a, const LimitRow& b) { return a.eps > b.eps; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].deviation > sorted[i - 1].deviation) report.monotone = false;
  }
  return report;
}

}  // namespace alphami
