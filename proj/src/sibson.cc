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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "alphami/divergence.h"
#include "alphami/error.h"

namespace alphami {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Normalizes log-weights into a probability vector; -inf entries get zero.
std::vector<double> Softmax(std::span<const double> log_w) {
  const double lse = LogSumExp(log_w);
  std::vector<double> out(log_w.size(), 0.0);
  for (std::size_t i = 0; i < log_w.size(); ++i) {
    if (log_w[i] != kNegInf) out[i] = std::exp(log_w[i] - lse);
  }
  return out;
}

Pmf NormalizedPmf(const Labels& labels, std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  for (double& w : weights) w /= total;
  return Pmf(labels, std::move(weights));
}

double NonNegative(double v) { return v < 0.0 ? 0.0 : v; }

// Per-z factors shared by the conditional measures.
struct ZFactors {
  Pmf pz;
  Kernel x_given_z;
  Kernel y_given_z;
};

ZFactors FactorsOf(const Joint3& j) {
  return ZFactors{Marginal(j, Axis::kZ), Conditional(j, Axis::kX, Axis::kZ),
                  Conditional(j, Axis::kY, Axis::kZ)};
}

}  // namespace

const char* MiVariantName(MiVariant v) {
  switch (v) {
    case MiVariant::kUncond:
      return "UNCOND";
    case MiVariant::kCondZ:
      return "COND_Z";
    case MiVariant::kCondYGivenZ:
      return "COND_YGZ";
    case MiVariant::kInfoRadius:
      return "INFO_RADIUS";
    case MiVariant::kLeakage:
      return "LEAKAGE";
    case MiVariant::kCondLeakage:
      return "COND_LEAKAGE";
  }
  return "UNKNOWN";
}

double MutualInformation(const Joint2& jxy) {
  const Pmf px = MarginalX(jxy);
  const Pmf py = MarginalY(jxy);
  std::vector<double> product(jxy.nx() * jxy.ny());
  for (std::size_t x = 0; x < jxy.nx(); ++x) {
    for (std::size_t y = 0; y < jxy.ny(); ++y) product[x * jxy.ny() + y] = px[x] * py[y];
  }
  return KlDivergence(jxy.probs(), product);
}

double ConditionalMutualInformation(const Joint3& j) {
  return KlDivergence(j.probs(), MarkovProduct(j).probs());
}

double ProductDivergence(const Joint2& jxy, Alpha alpha) {
  const Pmf px = MarginalX(jxy);
  const Pmf py = MarginalY(jxy);
  std::vector<double> product(jxy.nx() * jxy.ny());
  for (std::size_t x = 0; x < jxy.nx(); ++x) {
    for (std::size_t y = 0; y < jxy.ny(); ++y) product[x * jxy.ny() + y] = px[x] * py[y];
  }
  return RenyiDivergence(jxy.probs(), product, alpha);
}

double MaximalLeakage(const Joint2& jxy) {
  const Kernel y_given_x = ConditionalYGivenX(jxy);
  double total = 0.0;
  for (std::size_t y = 0; y < jxy.ny(); ++y) {
    double best = 0.0;
    for (std::size_t x = 0; x < jxy.nx(); ++x) {
      if (y_given_x.reachable(x)) best = std::max(best, y_given_x(x, y));
    }
    total += best;
  }
  return NonNegative(std::log(total));
}

MiReport SibsonMi(const Joint2& jxy, Alpha alpha) {
  MiReport report;
  report.alpha = alpha;
  report.variant = MiVariant::kUncond;
  const Pmf px = MarginalX(jxy);
  const Kernel y_given_x = ConditionalYGivenX(jxy);

  if (alpha.is_one()) {
    report.value_nats = MutualInformation(jxy);
    report.optimizer = MarginalY(jxy);
    return report;
  }
  if (alpha.is_infinity()) {
    report.variant = MiVariant::kLeakage;
    report.value_nats = MaximalLeakage(jxy);
    std::vector<double> best(jxy.ny(), 0.0);
    for (std::size_t y = 0; y < jxy.ny(); ++y) {
      for (std::size_t x = 0; x < jxy.nx(); ++x) {
        if (y_given_x.reachable(x)) best[y] = std::max(best[y], y_given_x(x, y));
      }
    }
    report.optimizer = NormalizedPmf(jxy.y_labels(), std::move(best));
    return report;
  }

  // I_a = a/(a-1) log sum_y (sum_x P_X(x) P_{Y|X}(y|x)^a)^(1/a).
  const double a = alpha.value();
  std::vector<double> log_b_over_a(jxy.ny(), kNegInf);
  std::vector<double> terms;
  for (std::size_t y = 0; y < jxy.ny(); ++y) {
    terms.clear();
    for (std::size_t x = 0; x < jxy.nx(); ++x) {
      if (jxy(x, y) <= 0.0) continue;
      terms.push_back(std::log(px[x]) + a * std::log(y_given_x(x, y)));
    }
    log_b_over_a[y] = LogSumExp(terms) / a;
  }
  report.value_nats = NonNegative(a / (a - 1.0) * LogSumExp(log_b_over_a));
  report.optimizer = Pmf(jxy.y_labels(), Softmax(log_b_over_a));
  return report;
}

double InfoRadius(std::span<const Pmf> measures, std::span<const double> weights,
                  Alpha alpha) {
  if (!alpha.is_finite() || alpha.value() <= 1.0) {
    throw Error(ErrorKind::kPrecondition,
                "information radius requires a finite order above 1");
  }
  if (measures.empty() || measures.size() != weights.size()) {
    throw Error(ErrorKind::kShape, "information radius: one weight per measure");
  }
  double total_weight = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorKind::kValidation, "information radius: negative weight");
    }
    total_weight += w;
  }
  if (total_weight <= 0.0) {
    throw Error(ErrorKind::kValidation, "information radius: weights sum to zero");
  }
  const std::size_t n = measures.front().size();
  for (const Pmf& m : measures) {
    if (m.size() != n) {
      throw Error(ErrorKind::kShape, "information radius: alphabet mismatch");
    }
  }
  // The minimizing center is proportional to (sum_i w_i mu_i^a)^(1/a).
  const double a = alpha.value();
  std::vector<double> log_a_over_a(n);
  std::vector<double> terms;
  for (std::size_t y = 0; y < n; ++y) {
    terms.clear();
    for (std::size_t i = 0; i < measures.size(); ++i) {
      if (weights[i] <= 0.0 || measures[i][y] <= 0.0) continue;
      terms.push_back(std::log(weights[i]) + a * std::log(measures[i][y]));
    }
    log_a_over_a[y] = LogSumExp(terms) / a;
  }
  return a / (a - 1.0) * LogSumExp(log_a_over_a);
}

MiReport CondSibsonZ(const Joint3& j, Alpha alpha) {
  MiReport report;
  report.alpha = alpha;
  report.variant = MiVariant::kCondZ;
  const ZFactors f = FactorsOf(j);

  if (alpha.is_one()) {
    report.value_nats = ConditionalMutualInformation(j);
    report.optimizer = f.pz;
    return report;
  }

  if (alpha.is_infinity()) {
    // Limit of the closed form: log E_Z[max_{m > 0} P_{XY|Z} / m] with
    // m = P_{X|Z} P_{Y|Z}.
    std::vector<double> weight(j.nz(), 0.0);
    double total = 0.0;
    for (std::size_t z = 0; z < j.nz(); ++z) {
      if (f.pz[z] <= 0.0) continue;
      double best = 0.0;
      for (std::size_t x = 0; x < j.nx(); ++x) {
        for (std::size_t y = 0; y < j.ny(); ++y) {
          const double m = f.x_given_z(z, x) * f.y_given_z(z, y);
          const double p = j(x, y, z) / f.pz[z];
          if (m > 0.0) {
            best = std::max(best, p / m);
          } else if (p > 0.0) {
            best = kInf;
          }
        }
      }
      weight[z] = f.pz[z] * best;
      total += weight[z];
    }
    report.value_nats = NonNegative(std::log(total));
    if (std::isfinite(total)) {
      report.optimizer = NormalizedPmf(j.z_labels(), std::move(weight));
    }
    return report;
  }

  // a/(a-1) log sum_z P_Z(z) S_z^(1/a),
  // S_z = sum_{x,y} P_{XY|Z}^a (P_{X|Z} P_{Y|Z})^(1-a).
  const double a = alpha.value();
  std::vector<double> log_w(j.nz(), kNegInf);
  std::vector<double> terms;
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (f.pz[z] <= 0.0) continue;
    terms.clear();
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        const double p = j(x, y, z) / f.pz[z];
        if (p <= 0.0) continue;
        const double m = f.x_given_z(z, x) * f.y_given_z(z, y);
        if (m <= 0.0) {
          if (a > 1.0) {
            report.value_nats = kInf;
            return report;
          }
          continue;
        }
        terms.push_back(a * std::log(p) + (1.0 - a) * std::log(m));
      }
    }
    log_w[z] = std::log(f.pz[z]) + LogSumExp(terms) / a;
  }
  report.value_nats = NonNegative(a / (a - 1.0) * LogSumExp(log_w));
  report.optimizer = Pmf(j.z_labels(), Softmax(log_w));
  return report;
}

MiReport CondSibsonYGivenZ(const Joint3& j, Alpha alpha) {
  MiReport report;
  report.alpha = alpha;
  report.variant = MiVariant::kCondYGivenZ;
  const ZFactors f = FactorsOf(j);
  std::vector<bool> reachable(j.nz());
  for (std::size_t z = 0; z < j.nz(); ++z) reachable[z] = f.pz[z] > 0.0;

  if (alpha.is_one()) {
    report.value_nats = ConditionalMutualInformation(j);
    report.optimizer = f.y_given_z;
    return report;
  }

  if (alpha.is_infinity()) {
    report.variant = MiVariant::kCondLeakage;
    report.value_nats = CondMaximalLeakage(j);
    std::vector<double> rows(j.nz() * j.ny(), 0.0);
    for (std::size_t z = 0; z < j.nz(); ++z) {
      if (!reachable[z]) continue;
      double total = 0.0;
      for (std::size_t y = 0; y < j.ny(); ++y) {
        double best = 0.0;
        for (std::size_t x = 0; x < j.nx(); ++x) {
          const double pxz = f.x_given_z(z, x) * f.pz[z];
          if (pxz > 0.0) best = std::max(best, j(x, y, z) / pxz);
        }
        rows[z * j.ny() + y] = best;
        total += best;
      }
      for (std::size_t y = 0; y < j.ny(); ++y) rows[z * j.ny() + y] /= total;
    }
    report.optimizer = Kernel(j.z_labels(), j.y_labels(), std::move(rows), reachable);
    return report;
  }

  // Per z, Q_{Y|Z=z} is free, so Sibson's identity applies slice by slice:
  // A_z(y) = sum_x P_{XY|Z}(x,y|z)^a P_{X|Z}(x|z)^(1-a),
  // I = 1/(a-1) log sum_z P_Z(z) (sum_y A_z(y)^(1/a))^a.
  const double a = alpha.value();
  std::vector<double> log_outer(j.nz(), kNegInf);
  std::vector<double> rows(j.nz() * j.ny(), 0.0);
  std::vector<double> log_a_over_a(j.ny());
  std::vector<double> terms;
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (!reachable[z]) continue;
    for (std::size_t y = 0; y < j.ny(); ++y) {
      terms.clear();
      for (std::size_t x = 0; x < j.nx(); ++x) {
        const double p = j(x, y, z) / f.pz[z];
        if (p <= 0.0) continue;
        terms.push_back(a * std::log(p) + (1.0 - a) * std::log(f.x_given_z(z, x)));
      }
      log_a_over_a[y] = LogSumExp(terms) / a;
    }
    log_outer[z] = std::log(f.pz[z]) + a * LogSumExp(log_a_over_a);
    const std::vector<double> q = Softmax(log_a_over_a);
    std::copy(q.begin(), q.end(), rows.begin() + static_cast<std::ptrdiff_t>(z * j.ny()));
  }
  report.value_nats = NonNegative(LogSumExp(log_outer) / (a - 1.0));
  report.optimizer = Kernel(j.z_labels(), j.y_labels(), std::move(rows), reachable);
  return report;
}

double CondMaximalLeakage(const Joint3& j) {
  const Pmf pz = Marginal(j, Axis::kZ);
  const Kernel x_given_z = Conditional(j, Axis::kX, Axis::kZ);
  double worst = kNegInf;
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (pz[z] <= 0.0) continue;
    double total = 0.0;
    for (std::size_t y = 0; y < j.ny(); ++y) {
      double best = 0.0;
      for (std::size_t x = 0; x < j.nx(); ++x) {
        const double pxz = x_given_z(z, x) * pz[z];
        if (pxz > 0.0) best = std::max(best, j(x, y, z) / pxz);
      }
      total += best;
    }
    worst = std::max(worst, std::log(total));
  }
  return NonNegative(worst);
}

double LmgfRepresentation::MaxGap() const {
  const double values[] = {closed_form, via_renyi, via_hellinger};
  double gap = 0.0;
  for (double u : values) {
    for (double v : values) {
      if (u == v) continue;  // includes matching infinities
      gap = std::max(gap, std::abs(u - v));
    }
  }
  return gap;
}

LmgfRepresentation LmgfRepresentationOf(const Joint3& j, double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::kPrecondition,
                "moment representation requires a finite order above 1");
  }
  const Alpha order = Alpha::Finite(alpha);
  const ZFactors f = FactorsOf(j);
  LmgfRepresentation rep;
  rep.closed_form = CondSibsonZ(j, order).value_nats;

  const double holder = (alpha - 1.0) / alpha;
  double renyi_moment = 0.0;
  double hellinger_moment = 0.0;
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (f.pz[z] <= 0.0) continue;
    const Joint2 slice = ConditionalSlice(j, z);
    std::vector<double> product(j.nx() * j.ny());
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        product[x * j.ny() + y] = f.x_given_z(z, x) * f.y_given_z(z, y);
      }
    }
    const double d = RenyiDivergence(slice.probs(), product, order);
    const double h = HellingerIntegral(slice.probs(), product, alpha);
    renyi_moment += f.pz[z] * std::exp(holder * d);
    hellinger_moment += f.pz[z] * std::pow(h, 1.0 / alpha);
  }
  rep.via_renyi = std::log(renyi_moment) / holder;
  rep.via_hellinger = std::log(hellinger_moment) / holder;
  return rep;
}

AdditivityCheck AdditivityCheckOf(const Joint3& j, Alpha alpha, int n) {
  AdditivityCheck check;
  check.tensorized = CondSibsonZ(TensorPower(j, n), alpha).value_nats;
  check.scaled = static_cast<double>(n) * CondSibsonZ(j, alpha).value_nats;
  return check;
}

}  // namespace alphami
