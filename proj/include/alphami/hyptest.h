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
// Composite test of H0: (X,Y,Z)^n iid P_XYZ against H1: iid
// Q_Z P_{X|Z} P_{Y|Z} for an unknown Q_Z.
//
// The test sums the per-symbol score log(P_{XY|Z} / (P_{X|Z} P_{Y|Z})) and
// accepts H0 when the sum reaches n tau. Scores and tau are rounded to
// multiples of kScoreQuantum, so the exact and sampled paths apply the same
// integer comparison. A symbol with P_XYZ = 0 but positive product mass
// scores -inf and forces rejection.
#ifndef ALPHAMI_HYPTEST_H_
#define ALPHAMI_HYPTEST_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "alphami/alpha.h"
#include "alphami/execution.h"
#include "alphami/prob.h"

namespace alphami {

inline constexpr double kScoreQuantum = 1e-9;
inline constexpr std::size_t kMaxDpStates = 1'000'000;
inline constexpr double kDefaultGridStep = 0.01;
// Margin by which the grid rate must exceed a claimed rate.
inline constexpr double kRateMargin = 1e-3;

struct ThresholdTest {
  double tau = 0.0;  // nats per symbol; +-inf allowed
  int n = 1;
};

// Per-cell scores of a joint, in Joint3::Index order. Cells with zero
// product mass carry NaN: they have probability zero under both hypotheses.
std::vector<double> ScoreTable(const Joint3& j);

// All points of the simplex over `active` coordinates whose entries are
// multiples of `step` (1/step rounded to an integer), embedded in size `n`
// vectors that are zero elsewhere.
std::vector<std::vector<double>> SimplexGrid(std::size_t n,
                                             const std::vector<std::size_t>& active,
                                             double step);

enum class ErrorMethod { kExactDp, kMonteCarlo };
const char* ErrorMethodName(ErrorMethod m);

struct ErrorReport {
  double p1 = 0.0;        // P_null(reject)
  double p2_worst = 0.0;  // max over alternatives of P_alt(accept)
  double rate_r = 0.0;    // -(1/n) log p2_worst
  std::vector<double> worst_qz;
  // Per-alternative type-2 errors, in grid or list order.
  std::vector<double> p2;
  // 95% binomial half-widths (Monte Carlo only).
  double p1_half_width = 0.0;
  std::vector<double> p2_half_width;
  ErrorMethod method = ErrorMethod::kExactDp;
  int n = 0;
  uint64_t seed = 0;
  std::size_t grid_points = 0;
};

// Exact error probabilities for one alternative.
double ExactTypeOneError(const Joint3& j, const ThresholdTest& test);
double ExactTypeTwoError(const Joint3& j, const ThresholdTest& test,
                         const std::vector<double>& qz);

// Exact errors with the alternative ranging over the simplex grid on the
// reachable z values, plus Q_Z = P_Z. Throws Error(kResource) when the
// score-sum support exceeds kMaxDpStates.
ErrorReport ExactErrors(const Joint3& j, const ThresholdTest& test,
                        double qz_grid_step = kDefaultGridStep,
                        Execution execution = Execution::kParallel);

// Seeded estimates over the listed alternatives. Trial t of the null uses
// ItemEngine(seed, 0, t) and of alternative q uses ItemEngine(seed, q + 1, t).
ErrorReport MonteCarloErrors(const Joint3& j, const ThresholdTest& test,
                             const std::vector<std::vector<double>>& qz_list,
                             int trials, uint64_t seed,
                             Execution execution = Execution::kParallel);

struct Theorem6Report {
  double lhs = 0.0;  // 1 - p1
  double rhs = 0.0;  // exp(-h n (R - I_a^Z))
  double grid_rate = 0.0;
  double claimed_rate = 0.0;
  double information = 0.0;  // I_a^Z
  // (1/n) log(1 - p1) and -h (R - I_a^Z).
  double normalized_lhs = 0.0;
  double normalized_rhs = 0.0;
  double grid_step = 0.0;
  bool certified = false;
  bool holds = false;  // meaningful only when certified
};

// Checks 1 - p1 <= exp(-h n (R - I_a^Z)) with h = (a-1)/a for a finite order
// above 1. R defaults to the grid rate less kRateMargin; a smaller claimed
// rate may be passed. The premise is certified when R > 0 and R is at most
// the grid rate less the margin.
Theorem6Report CheckTheorem6(const Joint3& j, const ThresholdTest& test, double alpha,
                             double qz_grid_step = kDefaultGridStep,
                             double claimed_rate = std::numeric_limits<double>::quiet_NaN(),
                             Execution execution = Execution::kParallel);

struct SweepRow {
  int n = 0;
  Alpha alpha = Alpha::One();
  bool best = false;  // the smallest bound at this n; alpha is its minimizer
  double empirical = 0.0;      // (1/n) log(1 - p1)
  double bound = 0.0;          // -h (R - I_a^Z)
  double claimed_rate = 0.0;
  bool certified = false;
  bool holds = false;
};

// One row per (n, a) and one best row per n holding the smallest bound.
std::vector<SweepRow> ExponentSweep(const Joint3& j, double tau,
                                    const std::vector<double>& alphas,
                                    const std::vector<int>& n_grid,
                                    double qz_grid_step = kDefaultGridStep,
                                    double claimed_rate = std::numeric_limits<double>::quiet_NaN(),
                                    Execution execution = Execution::kParallel);

}  // namespace alphami

#endif  // ALPHAMI_HYPTEST_H_
