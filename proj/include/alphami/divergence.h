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
#ifndef ALPHAMI_DIVERGENCE_H_
#define ALPHAMI_DIVERGENCE_H_

#include <span>
#include <vector>

#include "alphami/alpha.h"

namespace alphami {

// All values are in nats; +inf is the floating-point infinity.
//
// Zero conventions: cells with p_i = 0 contribute nothing for any order.
// Cells with q_i = 0 < p_i make the divergence infinite for orders above one
// and contribute nothing below one. Arrays of any rank are treated as flat
// pmfs; a length mismatch throws Error(kShape).

// log sum_i exp(v_i), with -inf entries ignored; -inf for an empty sum.
double LogSumExp(std::span<const double> v);

// log sum_i p_i^a q_i^(1-a) for a finite order, evaluated in log space.
double LogHellingerSum(std::span<const double> p, std::span<const double> q,
                       double alpha);

double RenyiDivergence(std::span<const double> p, std::span<const double> q,
                       Alpha alpha);
double KlDivergence(std::span<const double> p, std::span<const double> q);
double MaxDivergence(std::span<const double> p, std::span<const double> q);

// sum_i q_i (p_i / q_i)^a. Finite orders only.
double HellingerIntegral(std::span<const double> p, std::span<const double> q,
                         double alpha);

// HellingerIntegral(p, q) - 1 computed without cancellation: the difference
// d = p - q enters as sum_i q_i phi(d_i / q_i) with
// phi(t) = (1 + t)^a - 1 - a t >= 0. Exactly zero when d is.
double HellingerExcessFromDelta(std::span<const double> q,
                                std::span<const double> d, double alpha);
double HellingerExcess(std::span<const double> p, std::span<const double> q,
                       double alpha);

struct LimitRow {
  double eps = 0.0;
  double below = 0.0;      // D at 1 - eps
  double above = 0.0;      // D at 1 + eps
  double deviation = 0.0;  // max |D - KL| over the two sides
};

struct LimitReport {
  double kl = 0.0;
  std::vector<LimitRow> rows;  // in the order of the input grid
  // Deviations do not grow along the grid sorted by decreasing eps.
  bool monotone = true;
};

// Evaluates the Renyi divergence at 1 +- eps and compares with KL.
LimitReport RenyiLimitCheck(std::span<const double> p,
                            std::span<const double> q,
                            std::span<const double> eps_grid);

}  // namespace alphami

#endif  // ALPHAMI_DIVERGENCE_H_
