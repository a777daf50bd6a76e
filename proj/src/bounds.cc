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
#include "alphami/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphami/error.h"
#include "alphami/sibson.h"

namespace alphami {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireOrderAtLeastOne(Alpha alpha) {
  if (alpha.is_finite() && alpha.value() < 1.0) {
    throw Error(ErrorKind::kPrecondition, "bounds require an order of at least 1");
  }
}

// mass^h exp(h info), with 0^0 = 1 and a zero mass winning over a finite
// information term.
BoundReport Assemble(BoundKind which, Alpha alpha, double lhs, double mass,
                     double info) {
  BoundReport r;
  r.which = which;
  r.alpha = alpha;
  r.lhs = lhs;
  r.mass_factor = mass;
  r.information = info;
  r.uninformative = alpha.is_one() || (alpha.is_finite() && alpha.value() <= kUninformativeOrder);
  const double h = alpha.HolderExponent();
  if (h == 0.0) {
    r.rhs = 1.0;
  } else if (std::isinf(info)) {
    r.rhs = kInf;
    r.vacuous = true;
  } else if (mass == 0.0) {
    r.rhs = 0.0;
  } else {
    r.rhs = std::pow(mass, h) * std::exp(h * info);
  }
  r.slack = r.rhs - r.lhs;
  return r;
}

}  // namespace

const char* BoundKindName(BoundKind kind) {
  switch (kind) {
    case BoundKind::kThm1:
      return "THM1";
    case BoundKind::kThm3:
      return "THM3";
    case BoundKind::kCorLeakage:
      return "COR_LEAK";
    case BoundKind::kCorSdpi:
      return "COR_SDPI";
  }
  return "UNKNOWN";
}

double EventProbability(const Joint3& j, const EventMask& e) {
  e.RequireConforms(j);
  double total = 0.0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (e.cells()[i]) total += j.probs()[i];
  }
  return total;
}

double MarkovSmallBall(const Joint3& j, const EventMask& e) {
  e.RequireConforms(j);
  const Pmf pz = Marginal(j, Axis::kZ);
  const Kernel x_given_z = Conditional(j, Axis::kX, Axis::kZ);
  const Kernel y_given_z = Conditional(j, Axis::kY, Axis::kZ);
  double worst = 0.0;
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (pz[z] <= 0.0) continue;
    const Mask2 slice = e.Slice(z);
    double mass = 0.0;
    for (std::size_t x = 0; x < j.nx(); ++x) {
      for (std::size_t y = 0; y < j.ny(); ++y) {
        if (slice(x, y)) mass += x_given_z(z, x) * y_given_z(z, y);
      }
    }
    worst = std::max(worst, mass);
  }
  return worst;
}

double ConditionalSmallBall(const Joint3& j, const EventMask& e) {
  e.RequireConforms(j);
  const Pmf pz = Marginal(j, Axis::kZ);
  const Kernel x_given_z = Conditional(j, Axis::kX, Axis::kZ);
  const Kernel y_given_z = Conditional(j, Axis::kY, Axis::kZ);
  double expectation = 0.0;
  for (std::size_t z = 0; z < j.nz(); ++z) {
    if (pz[z] <= 0.0) continue;
    double worst = 0.0;
    for (std::size_t y = 0; y < j.ny(); ++y) {
      if (y_given_z(z, y) <= 0.0) continue;
      const std::vector<char> slice = e.SliceZY(z, y);
      double mass = 0.0;
      for (std::size_t x = 0; x < j.nx(); ++x) {
        if (slice[x]) mass += x_given_z(z, x);
      }
      worst = std::max(worst, mass);
    }
    expectation += pz[z] * worst;
  }
  return expectation;
}

BoundReport BoundThm3(const Joint3& j, const EventMask& e, Alpha alpha) {
  RequireOrderAtLeastOne(alpha);
  const double lhs = EventProbability(j, e);
  const double mass = MarkovSmallBall(j, e);
  const double info = alpha.is_one() ? 0.0 : CondSibsonZ(j, alpha).value_nats;
  return Assemble(BoundKind::kThm3, alpha, lhs, mass, info);
}

BoundReport BoundThm1(const Joint3& j, const EventMask& e, Alpha alpha) {
  RequireOrderAtLeastOne(alpha);
  const double lhs = EventProbability(j, e);
  const double mass = ConditionalSmallBall(j, e);
  const double info = alpha.is_one() ? 0.0 : CondSibsonYGivenZ(j, alpha).value_nats;
  return Assemble(BoundKind::kThm1, alpha, lhs, mass, info);
}

BoundReport BoundCorLeakage(const Joint3& j, const EventMask& e) {
  const double lhs = EventProbability(j, e);
  const double mass = ConditionalSmallBall(j, e);
  return Assemble(BoundKind::kCorLeakage, Alpha::Infinity(), lhs, mass,
                  CondMaximalLeakage(j));
}

BoundReport BoundCorSdpi(const Joint4& j4, const EventMask& e_wyz, Alpha alpha,
                         double eta) {
  if (!alpha.is_finite() || alpha.value() <= 1.0) {
    throw Error(ErrorKind::kPrecondition,
                "the contraction bound requires a finite order above 1");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw Error(ErrorKind::kPrecondition, "eta must lie in (0, 1]");
  }
  if (MarkovDeviation(j4) > 1e-10) {
    throw Error(ErrorKind::kPrecondition, "(Z, W) - X - Y is not a Markov chain");
  }
  const Joint3 wyz = MarginalWYZ(j4);
  const Joint3 wxz = MarginalWXZ(j4);
  const double lhs = EventProbability(wyz, e_wyz);
  const double mass = MarkovSmallBall(wyz, e_wyz);
  const double info = CondSibsonZ(wxz, alpha).value_nats;
  BoundReport r = Assemble(BoundKind::kCorSdpi, alpha, lhs, mass, info);
  r.rhs *= std::pow(eta, 1.0 / alpha.value());
  r.slack = r.rhs - r.lhs;
  return r;
}

}  // namespace alphami
