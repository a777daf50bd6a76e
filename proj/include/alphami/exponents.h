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
//
// Fenchel conjugates f*(l) = sup_x (l x - f(x)) of sampled functions, and the
// conjugate forms of the type-1 / type-2 error-exponent functions of the
// composite test in hyptest.h, all in terms of I_a^Z.
#ifndef ALPHAMI_EXPONENTS_H_
#define ALPHAMI_EXPONENTS_H_

#include <span>
#include <utility>
#include <vector>

#include "alphami/prob.h"

namespace alphami {

struct Sample {
  double x = 0.0;
  double fx = 0.0;
};

struct ConvexConjugate {
  std::vector<Sample> samples;  // (lambda, f*(lambda))
  // Index into the input samples attaining each maximum (lowest on ties).
  std::vector<std::size_t> argmax;
};

// Exact conjugate of the sampled restriction of f. Throws Error(kValidation)
// on empty input or non-finite values.
ConvexConjugate NumericConjugate(std::span<const Sample> samples,
                                 std::span<const double> lambdas);

// Largest amount by which a middle sample of three consecutive ones lies
// above their chord; +inf when x is not strictly increasing. Zero or
// negative for convex samples.
double ConvexityViolation(std::span<const Sample> samples);
bool IsConvexAlongGrid(std::span<const Sample> samples, double tol = 1e-9);

// a = 1 / (1 - l) maps l < 0 onto a in (0, 1); LambdaFromAlpha inverts it.
double AlphaFromLambda(double lambda);
double LambdaFromAlpha(double alpha);

// E_P*(l): +inf for l > 0, 0 at l = 0 and l I^Z_{1/(1-l)} for l < 0.
double EpStar(const Joint3& j, double lambda);

// 200 log-spaced orders in [0.005, 1], ending exactly at 1.
std::vector<double> DefaultAlphaGrid();

struct BiconjugateValue {
  double value = 0.0;
  double argmax_alpha = 0.0;
};

// max over the grid of ((1-a)/a)(I_a^Z - e_q). The order 1 uses conditional
// mutual information and contributes 0.
BiconjugateValue EpBiconjugate(const Joint3& j, double e_q,
                               std::span<const double> alpha_grid);

// max over the grid of (I_a^Z - (a/(1-a)) e_p). The order 1 takes part only
// when e_p = 0, contributing I(X;Y|Z). If no grid point takes part the value
// is -inf.
BiconjugateValue EqBiconjugate(const Joint3& j, double e_p,
                               std::span<const double> alpha_grid);

// I_a^Z on the grid (order 1 mapped to I(X;Y|Z)), evaluated once so that
// callers sweeping e_q or e_p reuse it.
std::vector<double> CondSibsonZOnGrid(const Joint3& j, std::span<const double> alpha_grid);

BiconjugateValue EpBiconjugateFromValues(std::span<const double> alpha_grid,
                                         std::span<const double> info, double e_q);
BiconjugateValue EqBiconjugateFromValues(std::span<const double> alpha_grid,
                                         std::span<const double> info, double e_p);

}  // namespace alphami

#endif  // ALPHAMI_EXPONENTS_H_
