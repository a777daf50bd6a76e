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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "alphami/error.h"
#include "alphami/sibson.h"

namespace alphami {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Scores never exceed a few hundred nats in magnitude, so clamping tau here
// changes no decision and keeps n * tau / quantum inside int64.
constexpr double kTauClamp = 1e4;
constexpr int kMaxLength = 100'000;
constexpr std::size_t kMaxGridPoints = 10'000'000;

enum class Decision { kAlwaysAccept, kAlwaysReject, kCompare };

struct Rule {
  Decision decision = Decision::kCompare;
  int64_t threshold = 0;  // accept iff the key sum is >= threshold
};

Rule MakeRule(const ThresholdTest& test) {
  if (test.n < 1 || test.n > kMaxLength) {
    throw Error(ErrorKind::kValidation,
                "sample length must lie in [1, " + std::to_string(kMaxLength) + "]");
  }
  if (std::isnan(test.tau)) throw Error(ErrorKind::kValidation, "tau is NaN");
  Rule rule;
  if (test.tau == -kInf) {
    rule.decision = Decision::kAlwaysAccept;
  } else if (test.tau == kInf) {
    rule.decision = Decision::kAlwaysReject;
  } else {
    const double tau = std::clamp(test.tau, -kTauClamp, kTauClamp);
    rule.threshold = static_cast<int64_t>(test.n) * std::llround(tau / kScoreQuantum);
  }
  return rule;
}

// Per-cell quantized score; `dead` marks -inf scores.
struct Cell {
  int64_t key = 0;
  bool dead = false;
};

struct Model {
  std::vector<Cell> cells;       // Joint3::Index order
  std::vector<double> pz;
  std::vector<double> product;   // P_{X|Z} P_{Y|Z}, zero off reachable z
  std::vector<std::size_t> reachable;
};

Model BuildModel(const Joint3& j) {
  Model m;
  const std::vector<double> scores = ScoreTable(j);
  const Pmf pz = Marginal(j, Axis::kZ);
  const Kernel x_given_z = Conditional(j, Axis::kX, Axis::kZ);
  const Kernel y_given_z = Conditional(j, Axis::kY, Axis::kZ);
  m.pz.assign(pz.probs().begin(), pz.probs().end());
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (pz[z] > 0.0) m.reachable.push_back(z);
  }
  m.cells.resize(j.size());
  m.product.assign(j.size(), 0.0);
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      for (std::size_t z = 0; z < j.nz(); ++z) {
        const std::size_t i = j.Index(x, y, z);
        if (pz[z] > 0.0) m.product[i] = x_given_z(z, x) * y_given_z(z, y);
        const double s = scores[i];
        if (std::isnan(s)) continue;
        if (s == -kInf) {
          m.cells[i].dead = true;
        } else {
          m.cells[i].key = std::llround(s / kScoreQuantum);
        }
      }
    }
  }
  return m;
}

void RequireAlternative(const Model& m, const std::vector<double>& qz) {
  if (qz.size() != m.pz.size()) {
    throw Error(ErrorKind::kShape, "Q_Z has the wrong number of entries");
  }
  double total = 0.0;
  for (std::size_t z = 0; z < qz.size(); ++z) {
    if (!(qz[z] >= 0.0)) throw Error(ErrorKind::kValidation, "Q_Z has a negative entry");
    if (qz[z] > 0.0 && m.pz[z] == 0.0) {
      throw Error(ErrorKind::kValidation,
                  "Q_Z charges a z value where P_{X|Z} and P_{Y|Z} are undefined");
    }
    total += qz[z];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw Error(ErrorKind::kValidation, "Q_Z does not sum to 1");
  }
}

// Cell probabilities of the alternative Q_Z P_{X|Z} P_{Y|Z}.
std::vector<double> AlternativeCells(const Joint3& j, const Model& m,
                                     const std::vector<double>& qz) {
  std::vector<double> w(j.size(), 0.0);
  for (std::size_t i = 0; i < j.size(); ++i) w[i] = qz[i % j.nz()] * m.product[i];
  return w;
}

// Pooled per-symbol law of the key over live cells. Dead mass is dropped: it
// can only lead to rejection.
std::vector<std::pair<int64_t, double>> SymbolLaw(const Model& m,
                                                  std::span<const double> weights) {
  std::map<int64_t, double> law;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] > 0.0 && !m.cells[i].dead) law[m.cells[i].key] += weights[i];
  }
  return {law.begin(), law.end()};
}

double AcceptProbability(const std::vector<std::pair<int64_t, double>>& law, int n,
                         const Rule& rule) {
  if (rule.decision == Decision::kAlwaysAccept) return 1.0;
  if (rule.decision == Decision::kAlwaysReject) return 0.0;
  std::map<int64_t, double> dist{{0, 1.0}};
  for (int step = 0; step < n; ++step) {
    std::map<int64_t, double> next;
    for (const auto& [sum, p] : dist) {
      for (const auto& [key, q] : law) next[sum + key] += p * q;
      if (next.size() > kMaxDpStates) {
        throw Error(ErrorKind::kResource,
                    "score-sum support exceeds " + std::to_string(kMaxDpStates) +
                        " states; reduce n");
      }
    }
    dist = std::move(next);
  }
  double accept = 0.0;
  for (auto it = dist.lower_bound(rule.threshold); it != dist.end(); ++it) {
    accept += it->second;
  }
  return std::clamp(accept, 0.0, 1.0);
}

double RateOf(double p2, int n) {
  if (p2 <= 0.0) return kInf;
  return std::max(0.0, -std::log(p2) / n);
}

double HalfWidth(double p, int trials) {
  return 1.96 * std::sqrt(p * (1.0 - p) / trials);
}

// Largest entry, ties to the lowest index.
std::size_t ArgMax(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

template <typename F>
void ForEachIndex(std::size_t count, Execution execution, const F& f) {
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
      f(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) f(i);
  }
}

}  // namespace

const char* ErrorMethodName(ErrorMethod m) {
  return m == ErrorMethod::kExactDp ? "EXACT_DP" : "MONTE_CARLO";
}

std::vector<double> ScoreTable(const Joint3& j) {
  const Pmf pz = Marginal(j, Axis::kZ);
  const Kernel x_given_z = Conditional(j, Axis::kX, Axis::kZ);
  const Kernel y_given_z = Conditional(j, Axis::kY, Axis::kZ);
  std::vector<double> scores(j.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t x = 0; x < j.nx(); ++x) {
    for (std::size_t y = 0; y < j.ny(); ++y) {
      for (std::size_t z = 0; z < j.nz(); ++z) {
        if (pz[z] <= 0.0) continue;
        const double m = x_given_z(z, x) * y_given_z(z, y);
        if (m <= 0.0) continue;
        const double p = j(x, y, z);
        scores[j.Index(x, y, z)] =
            p > 0.0 ? std::log(p) - std::log(pz[z]) - std::log(m) : -kInf;
      }
    }
  }
  return scores;
}

std::vector<std::vector<double>> SimplexGrid(std::size_t n,
                                             const std::vector<std::size_t>& active,
                                             double step) {
  if (!(step > 0.0 && step <= 1.0)) {
    throw Error(ErrorKind::kValidation, "grid step must lie in (0, 1]");
  }
  if (active.empty()) throw Error(ErrorKind::kValidation, "grid needs a coordinate");
  for (std::size_t a : active) {
    if (a >= n) throw Error(ErrorKind::kShape, "grid coordinate out of range");
  }
  const int total = static_cast<int>(std::max(1L, std::lround(1.0 / step)));
  // C(total + k - 1, k - 1) points.
  double count = 1.0;
  for (std::size_t i = 1; i < active.size(); ++i) {
    count = count * static_cast<double>(total + i) / static_cast<double>(i);
  }
  if (count > static_cast<double>(kMaxGridPoints)) {
    throw Error(ErrorKind::kResource, "simplex grid is too large; increase the step");
  }
  std::vector<std::vector<double>> grid;
  std::vector<int> parts(active.size(), 0);
  // Enumerate compositions of `total` in lexicographic order.
  const auto recurse = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == active.size()) {
      parts[pos] = left;
      std::vector<double> point(n, 0.0);
      for (std::size_t i = 0; i < active.size(); ++i) {
        point[active[i]] = static_cast<double>(parts[i]) / total;
      }
      grid.push_back(std::move(point));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  recurse(recurse, 0, total);
  return grid;
}

double ExactTypeOneError(const Joint3& j, const ThresholdTest& test) {
  const Rule rule = MakeRule(test);
  const Model m = BuildModel(j);
  return 1.0 - AcceptProbability(SymbolLaw(m, j.probs()), test.n, rule);
}

double ExactTypeTwoError(const Joint3& j, const ThresholdTest& test,
                         const std::vector<double>& qz) {
  const Rule rule = MakeRule(test);
  const Model m = BuildModel(j);
  RequireAlternative(m, qz);
  return AcceptProbability(SymbolLaw(m, AlternativeCells(j, m, qz)), test.n, rule);
}

ErrorReport ExactErrors(const Joint3& j, const ThresholdTest& test, double qz_grid_step,
                        Execution execution) {
  const Rule rule = MakeRule(test);
  const Model m = BuildModel(j);
  std::vector<std::vector<double>> grid = SimplexGrid(j.nz(), m.reachable, qz_grid_step);
  grid.push_back(m.pz);

  ErrorReport r;
  r.method = ErrorMethod::kExactDp;
  r.n = test.n;
  r.grid_points = grid.size();
  r.p1 = std::clamp(1.0 - AcceptProbability(SymbolLaw(m, j.probs()), test.n, rule),
                    0.0, 1.0);
  r.p2.assign(grid.size(), 0.0);
  ForEachIndex(grid.size(), execution, [&](std::size_t g) {
    r.p2[g] = AcceptProbability(SymbolLaw(m, AlternativeCells(j, m, grid[g])), test.n,
                                rule);
  });
  const std::size_t worst = ArgMax(r.p2);
  r.p2_worst = r.p2[worst];
  r.worst_qz = grid[worst];
  r.rate_r = RateOf(r.p2_worst, test.n);
  return r;
}

ErrorReport MonteCarloErrors(const Joint3& j, const ThresholdTest& test,
                             const std::vector<std::vector<double>>& qz_list, int trials,
                             uint64_t seed, Execution execution) {
  if (trials < 1) throw Error(ErrorKind::kValidation, "trials must be >= 1");
  const Rule rule = MakeRule(test);
  const Model m = BuildModel(j);
  for (const auto& qz : qz_list) RequireAlternative(m, qz);

  // Returns 1 when the sampled sequence is accepted.
  const auto run_trial = [&](const std::vector<double>& weights, uint64_t stream,
                             std::size_t t) -> int {
    if (rule.decision == Decision::kAlwaysAccept) return 1;
    if (rule.decision == Decision::kAlwaysReject) return 0;
    std::mt19937_64 rng = ItemEngine(seed, stream, t);
    std::discrete_distribution<std::size_t> draw(weights.begin(), weights.end());
    int64_t sum = 0;
    for (int i = 0; i < test.n; ++i) {
      const Cell& c = m.cells[draw(rng)];
      if (c.dead) return 0;
      sum += c.key;
    }
    return sum >= rule.threshold ? 1 : 0;
  };
  // Integer counts make the reduction independent of scheduling.
  const auto accept_rate = [&](const std::vector<double>& weights, uint64_t stream) {
    std::vector<int> accepted(static_cast<std::size_t>(trials), 0);
    ForEachIndex(accepted.size(), execution,
                 [&](std::size_t t) { accepted[t] = run_trial(weights, stream, t); });
    int64_t total = 0;
    for (int a : accepted) total += a;
    return static_cast<double>(total) / trials;
  };

  ErrorReport r;
  r.method = ErrorMethod::kMonteCarlo;
  r.n = test.n;
  r.seed = seed;
  r.grid_points = qz_list.size();
  const std::vector<double> null_weights(j.probs().begin(), j.probs().end());
  r.p1 = 1.0 - accept_rate(null_weights, 0);
  r.p1_half_width = HalfWidth(r.p1, trials);
  for (std::size_t q = 0; q < qz_list.size(); ++q) {
    const double p2 = accept_rate(AlternativeCells(j, m, qz_list[q]), q + 1);
    r.p2.push_back(p2);
    r.p2_half_width.push_back(HalfWidth(p2, trials));
  }
  if (!r.p2.empty()) {
    const std::size_t worst = ArgMax(r.p2);
    r.p2_worst = r.p2[worst];
    r.worst_qz = qz_list[worst];
    r.rate_r = RateOf(r.p2_worst, test.n);
  }
  return r;
}

namespace {

Theorem6Report Theorem6FromErrors(const ErrorReport& errors, int n, double information,
                                  double alpha, double qz_grid_step,
                                  double claimed_rate) {
  Theorem6Report t;
  t.grid_step = qz_grid_step;
  t.grid_rate = errors.rate_r;
  t.information = information;
  const double ceiling = t.grid_rate - kRateMargin;
  t.claimed_rate = std::isnan(claimed_rate) ? ceiling : claimed_rate;
  t.certified = t.claimed_rate > 0.0 && t.claimed_rate <= ceiling;
  const double h = (alpha - 1.0) / alpha;
  t.lhs = 1.0 - errors.p1;
  t.normalized_lhs = t.lhs > 0.0 ? std::log(t.lhs) / n : -kInf;
  if (std::isinf(t.claimed_rate)) {
    t.normalized_rhs = -kInf;
    t.rhs = 0.0;
  } else {
    t.normalized_rhs = -h * (t.claimed_rate - information);
    t.rhs = std::exp(n * t.normalized_rhs);
  }
  t.holds = t.lhs <= t.rhs + 1e-9;
  return t;
}

}  // namespace

Theorem6Report CheckTheorem6(const Joint3& j, const ThresholdTest& test, double alpha,
                             double qz_grid_step, double claimed_rate,
                             Execution execution) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::kPrecondition, "the test bound requires a finite order above 1");
  }
  const ErrorReport errors = ExactErrors(j, test, qz_grid_step, execution);
  const double info = CondSibsonZ(j, Alpha::Finite(alpha)).value_nats;
  return Theorem6FromErrors(errors, test.n, info, alpha, qz_grid_step, claimed_rate);
}

std::vector<SweepRow> ExponentSweep(const Joint3& j, double tau,
                                    const std::vector<double>& alphas,
                                    const std::vector<int>& n_grid, double qz_grid_step,
                                    double claimed_rate, Execution execution) {
  if (alphas.empty()) throw Error(ErrorKind::kValidation, "sweep needs at least one order");
  std::vector<double> info(alphas.size());
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    if (!(alphas[a] > 1.0) || !std::isfinite(alphas[a])) {
      throw Error(ErrorKind::kPrecondition, "sweep orders must be finite and above 1");
    }
    info[a] = CondSibsonZ(j, Alpha::Finite(alphas[a])).value_nats;
  }
  std::vector<SweepRow> rows;
  for (int n : n_grid) {
    const ThresholdTest test{tau, n};
    const ErrorReport errors = ExactErrors(j, test, qz_grid_step, execution);
    std::size_t first = rows.size();
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      const Theorem6Report t =
          Theorem6FromErrors(errors, n, info[a], alphas[a], qz_grid_step, claimed_rate);
      SweepRow row;
      row.n = n;
      row.alpha = Alpha::Finite(alphas[a]);
      row.empirical = t.normalized_lhs;
      row.bound = t.normalized_rhs;
      row.claimed_rate = t.claimed_rate;
      row.certified = t.certified;
      row.holds = t.holds;
      rows.push_back(row);
    }
    std::size_t best = first;
    for (std::size_t i = first + 1; i < rows.size(); ++i) {
      if (rows[i].bound < rows[best].bound) best = i;
    }
    SweepRow top = rows[best];
    top.best = true;
    rows.push_back(top);
  }
  return rows;
}

}  // namespace alphami
