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
// Sibson's alpha-mutual information and its conditional forms.
//
// Two conditional measures are provided. Both minimize the Renyi divergence
// from P_XYZ to a Markov-product reference and differ only in which factor is
// free:
//
//   I_a^Z(X,Y|Z)     = min over Q_Z     of D_a(P_XYZ || P_{X|Z} P_{Y|Z} Q_Z)
//   I_a^{Y|Z}(X,Y|Z) = min over Q_{Y|Z} of D_a(P_XYZ || P_Z P_{X|Z} Q_{Y|Z})
//
// Each has a closed form obtained from Sibson's identity; the sup order uses
// dedicated max-based formulas and the KL order uses conditional mutual
// information, so no finite-order formula is ever evaluated at 1 or at a huge
// order outside of limit tests.
#ifndef ALPHAMI_SIBSON_H_
#define ALPHAMI_SIBSON_H_

#include <span>
#include <variant>

#include "alphami/alpha.h"
#include "alphami/prob.h"

namespace alphami {

enum class MiVariant {
  kUncond,
  kCondZ,
  kCondYGivenZ,
  kInfoRadius,
  kLeakage,
  kCondLeakage,
};

const char* MiVariantName(MiVariant v);

struct MiReport {
  Alpha alpha = Alpha::One();
  double value_nats = 0.0;
  MiVariant variant = MiVariant::kUncond;
  // Minimizing Q_Y or Q_Z (Pmf), or Q_{Y|Z} (Kernel, rows indexed by z).
  std::variant<std::monostate, Pmf, Kernel> optimizer;
};

// Shannon quantities in nats.
double MutualInformation(const Joint2& jxy);
// I(X;Y|Z) = D(P_XYZ || P_Z P_{X|Z} P_{Y|Z}).
double ConditionalMutualInformation(const Joint3& j);

// D_a(P_XY || P_X P_Y): what I_a^Z reduces to when Z is constant.
double ProductDivergence(const Joint2& jxy, Alpha alpha);

// I_a(X,Y) = min over Q_Y of D_a(P_XY || P_X Q_Y).
MiReport SibsonMi(const Joint2& jxy, Alpha alpha);

// Information radius of `measures` with nonnegative `weights` for a finite
// order a > 1. Throws Error(kPrecondition) for other orders.
double InfoRadius(std::span<const Pmf> measures, std::span<const double> weights,
                  Alpha alpha);

// L(X -> Y) = log sum_y max_{x : P_X(x) > 0} P_{Y|X}(y|x).
double MaximalLeakage(const Joint2& jxy);

MiReport CondSibsonZ(const Joint3& j, Alpha alpha);
MiReport CondSibsonYGivenZ(const Joint3& j, Alpha alpha);

// L(X -> Y | Z) = max over reachable z of
// log sum_y max_{x : P(x|z) > 0} P_{Y|XZ}(y|x,z).
double CondMaximalLeakage(const Joint3& j);

// The closed form of I_a^Z and its two expectation forms over Z, one through
// per-z Renyi divergences and one through per-z Hellinger integrals.
struct LmgfRepresentation {
  double closed_form = 0.0;
  double via_renyi = 0.0;
  double via_hellinger = 0.0;

  double MaxGap() const;
};
LmgfRepresentation LmgfRepresentationOf(const Joint3& j, double alpha);

// I_a^Z of the n-fold iid power against n times I_a^Z of one copy.
struct AdditivityCheck {
  double tensorized = 0.0;
  double scaled = 0.0;
};
AdditivityCheck AdditivityCheckOf(const Joint3& j, Alpha alpha, int n);

}  // namespace alphami

#endif  // ALPHAMI_SIBSON_H_
