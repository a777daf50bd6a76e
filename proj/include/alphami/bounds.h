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
// Upper bounds on P_XYZ(E) in terms of the mass of E under Markov-product
// measures and an exponential of a conditional alpha-mutual information.
// Essential suprema are maxima over atoms of strictly positive mass.
#ifndef ALPHAMI_BOUNDS_H_
#define ALPHAMI_BOUNDS_H_

#include "alphami/alpha.h"
#include "alphami/prob.h"

namespace alphami {

enum class BoundKind { kThm1, kThm3, kCorLeakage, kCorSdpi };

const char* BoundKindName(BoundKind kind);

// Orders at or below this are flagged as uninformative: the Holder exponent
// (a - 1) / a is essentially zero and the bound degenerates to 1.
inline constexpr double kUninformativeOrder = 1.0 + 1e-6;

struct BoundReport {
  double lhs = 0.0;  // P(E)
  double rhs = 0.0;
  Alpha alpha = Alpha::One();
  double slack = 0.0;  // rhs - lhs
  BoundKind which = BoundKind::kThm3;
  // The small-ball factor the information term multiplies, before the
  // Holder exponent is applied.
  double mass_factor = 0.0;
  // The conditional information measure entering the exponential.
  double information = 0.0;
  bool vacuous = false;        // rhs is +inf (domination fails)
  bool uninformative = false;  // order too close to 1

  bool Holds(double tol = 1e-12) const { return slack >= -tol; }
};

// Direct masked sum P_XYZ(E).
double EventProbability(const Joint3& j, const EventMask& e);

// max over reachable z of (P_{X|Z=z} x P_{Y|Z=z})(E_z).
double MarkovSmallBall(const Joint3& j, const EventMask& e);

// E_Z[max over y with P_{Y|Z}(y|Z) > 0 of P_{X|Z}(E_{Z,y})].
double ConditionalSmallBall(const Joint3& j, const EventMask& e);

// P(E) <= MarkovSmallBall^((a-1)/a) exp((a-1)/a I_a^Z). Orders below 1
// throw Error(kPrecondition); the KL order gives the trivial bound 1.
BoundReport BoundThm3(const Joint3& j, const EventMask& e, Alpha alpha);

// P(E) <= ConditionalSmallBall^((a-1)/a) exp((a-1)/a I_a^{Y|Z}), with the
// exponent applied outside the expectation over Z.
BoundReport BoundThm1(const Joint3& j, const EventMask& e, Alpha alpha);

// P(E) <= ConditionalSmallBall exp(L(X -> Y | Z)).
BoundReport BoundCorLeakage(const Joint3& j, const EventMask& e);

// For (Z, W) - X - Y and E over W x Y x Z:
// P_WYZ(E) <= MarkovSmallBall_{WYZ}^((a-1)/a) eta^(1/a)
//             exp((a-1)/a I_a^Z(W, X | Z)).
// Throws Error(kPrecondition) when the Markov factorization deviates by more
// than 1e-10 or eta lies outside (0, 1].
BoundReport BoundCorSdpi(const Joint4& j4, const EventMask& e_wyz, Alpha alpha,
                         double eta);

}  // namespace alphami

#endif  // ALPHAMI_BOUNDS_H_
