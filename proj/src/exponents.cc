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
#include "alphami/exponents.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphami/alpha.h"
#include "alphami/error.h"
#include "alphami/sibson.h"

namespace alphami {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireGrid(std::span<const double> alpha_grid) {
  if (alpha_grid.empty()) throw Error(ErrorKind::kValidation, "order grid is empty");
  for (double a : alpha_grid) {
    if (!(a > 0.0 && a <= 1.0)) {
      throw Error(ErrorKind::kValidation, "grid orders must lie in (0, 1]");
    }
  }
}

double InfoAt(const Joint3& j, double alpha) {
  if (alpha == 1.0) return ConditionalMutualInformation(j);
  return CondSibsonZ(j, Alpha::Finite(alpha)).value_nats;
}

}  // namespace

ConvexConjugate NumericConjugate(std::span<const Sample> samples,
                                 std::span<const double> lambdas) {
  if (samples.empty()) throw Error(ErrorKind::kValidation, "no samples to conjugate");
  for (const Sample& s : samples) {
    if (!std::isfinite(s.x) || !std::isfinite(s.fx)) {
      throw Error(ErrorKind::kValidation, "samples must be finite");
    }
  }
  ConvexConjugate c;
  c.samples.reserve(lambdas.size());
  c.argmax.reserve(lambdas.size());
  for (double l : lambdas) {
    std::size_t best = 0;
    double value = l * samples[0].x - samples[0].fx;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      const double v = l * samples[i].x - samples[i].fx;
      if (v > value) {
        value = v;
        best = i;
      }
    }
    c.samples.push_back({l, value});
    c.argmax.push_back(best);
  }
  return c;
}

double ConvexityViolation(std::span<const Sample> samples) {
  double worst = samples.size() < 3 ? 0.0 : -kInf;
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const Sample& a = samples[i - 1];
    const Sample& b = samples[i];
    const Sample& c = samples[i + 1];
    if (!(a.x < b.x && b.x < c.x)) return kInf;
    const double t = (b.x - a.x) / (c.x - a.x);
    const double chord = (1.0 - t) * a.fx + t * c.fx;
    worst = std::max(worst, b.fx - chord);
  }
  return worst;
}

bool IsConvexAlongGrid(std::span<const Sample> samples, double tol) {
  return ConvexityViolation(samples) <= tol;
}

double AlphaFromLambda(double lambda) { return 1.0 / (1.0 - lambda); }

double LambdaFromAlpha(double alpha) { return 1.0 - 1.0 / alpha; }

double EpStar(const Joint3& j, double lambda) {
  if (std::isnan(lambda)) throw Error(ErrorKind::kValidation, "lambda is NaN");
  if (lambda > 0.0) return kInf;
  if (lambda == 0.0) return 0.0;
  if (lambda == -kInf) {
    throw Error(ErrorKind::kValidation, "lambda must be finite");
  }
  return lambda * CondSibsonZ(j, Alpha::Finite(AlphaFromLambda(lambda))).value_nats;
}

std::vector<double> DefaultAlphaGrid() {
  constexpr int kPoints = 200;
  const double lo = std::log(0.005);
  std::vector<double> grid(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    grid[i] = std::exp(lo - lo * i / (kPoints - 1));
  }
  grid.back() = 1.0;
  return grid;
}

std::vector<double> CondSibsonZOnGrid(const Joint3& j, std::span<const double> alpha_grid) {
  RequireGrid(alpha_grid);
  std::vector<double> info(alpha_grid.size());
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) info[i] = InfoAt(j, alpha_grid[i]);
  return info;
}

BiconjugateValue EpBiconjugateFromValues(std::span<const double> alpha_grid,
                                         std::span<const double> info, double e_q) {
  RequireGrid(alpha_grid);
  BiconjugateValue best{-kInf, alpha_grid[0]};
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    const double a = alpha_grid[i];
    const double v = a == 1.0 ? 0.0 : (1.0 - a) / a * (info[i] - e_q);
    if (v > best.value) best = {v, a};
  }
  return best;
}

BiconjugateValue EqBiconjugateFromValues(std::span<const double> alpha_grid,
                                         std::span<const double> info, double e_p) {
  RequireGrid(alpha_grid);
  BiconjugateValue best{-kInf, alpha_grid[0]};
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    const double a = alpha_grid[i];
    double v;
    if (a == 1.0) {
      if (e_p != 0.0) continue;
      v = info[i];
    } else {
      v = info[i] - a / (1.0 - a) * e_p;
    }
    if (v > best.value) best = {v, a};
  }
  return best;
}

BiconjugateValue EpBiconjugate(const Joint3& j, double e_q,
                               std::span<const double> alpha_grid) {
  return EpBiconjugateFromValues(alpha_grid, CondSibsonZOnGrid(j, alpha_grid), e_q);
}

BiconjugateValue EqBiconjugate(const Joint3& j, double e_p,
                               std::span<const double> alpha_grid) {
  return EqBiconjugateFromValues(alpha_grid, CondSibsonZOnGrid(j, alpha_grid), e_p);
}

}  // namespace alphami
