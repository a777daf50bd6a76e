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
// Contraction of the order-a Hellinger integral H_a(P||Q) = E_Q[(dP/dQ)^a]
// under Markov kernels, and the additive strong data-processing inequalities
// it implies for I_a^Z and I_a.
//
// H_a equals 1, not 0, on identical measures, so two functionals are tracked:
//
//   ratio      H_a(K mu || K nu) / H_a(mu || nu)              (tends to 1 as
//              mu -> nu, so its supremum is 1 for every kernel)
//   normalized (H_a(K mu || K nu) - 1) / (H_a(mu || nu) - 1)  (the usual
//              f-divergence contraction coefficient)
//
// The search returns lower bounds on both suprema. The inequality checks use
// the ratio's lower bound: a smaller eta only makes them harder to pass.
#ifndef ALPHAMI_SDPI_H_
#define ALPHAMI_SDPI_H_

#include <cstdint>
#include <vector>

#include "alphami/execution.h"
#include "alphami/prob.h"

namespace alphami {

struct MeasurePair {
  std::vector<double> mu;
  std::vector<double> nu;
};

struct ContractionEstimate {
  double eta_normalized = 0.0;
  double eta_ratio_lower = 0.0;
  MeasurePair normalized_witness;
  MeasurePair ratio_witness;
};

struct ContractionSearchOptions {
  int budget = 10'000;      // random pairs
  int ascent_starts = 10;   // best random pairs refined per functional
  int ascent_sweeps = 100;  // coordinate-ascent sweeps per start
  uint64_t seed = 0;
  Execution execution = Execution::kParallel;
};

// Functional values at one pair; -inf when undefined (mu == nu, or both
// integrals infinite). The normalized value is also undefined when the input
// excess is at most 1e-10, where it would be a ratio of rounding errors. Measures are over the kernel's input alphabet.
double NormalizedContraction(const Kernel& k, const MeasurePair& pair, double alpha);
double HellingerRatio(const Kernel& k, const MeasurePair& pair, double alpha);

// Seeded random search plus coordinate ascent over pairs supported on the
// kernel's reachable inputs. Deterministic in (kernel, alpha, options) and
// identical for both execution modes. Requires a finite order above 1 and at
// least two reachable inputs.
ContractionEstimate ContractionSearch(const Kernel& k, double alpha,
                                      const ContractionSearchOptions& options);

struct SdpiCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;  // lhs <= rhs + 1e-9
};

// For (Z, W) - X - Y: I_a^Z(W,Y|Z) <= log(eta)/(a-1) + I_a^Z(W,X|Z), with
// eta the ratio lower bound of `est` (computed for P_{Y|X}).
SdpiCheck SdpiConditionalCheck(const Joint4& j4, double alpha,
                               const ContractionEstimate& est);

// For W - X - Y with W drawn through `w_given_x`:
// I_a(W,Y) <= log(eta)/(a-1) + I_a(X,Y), eta from `est` for P_{W|X}.
SdpiCheck SdpiUnconditionalCheck(const Joint2& xy, const Kernel& w_given_x,
                                 double alpha, const ContractionEstimate& est);

}  // namespace alphami

#endif  // ALPHAMI_SDPI_H_
