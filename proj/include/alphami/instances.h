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
// Fixed and seeded random instances.
#ifndef ALPHAMI_INSTANCES_H_
#define ALPHAMI_INSTANCES_H_

#include <random>
#include <vector>

#include "alphami/prob.h"

namespace alphami {

// Z uniform on {0, 1}; given Z = 0, X = Y uniform on {0, 1}; given Z = 1,
// X and Y independent uniform bits.
Joint3 ReferenceJoint();

// A Markov joint X - Z - Y with full support.
Joint3 ReferenceMarkovJoint();

// Dirichlet(1) vector; each entry is zeroed with probability `zero_prob`,
// keeping at least one positive entry.
std::vector<double> RandomSimplexPoint(std::mt19937_64& rng, std::size_t n,
                                       double zero_prob = 0.0);

Joint3 RandomJoint3(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                    std::size_t nz, double zero_prob = 0.0);

// P_Z P_{X|Z} P_{Y|Z} with random factors.
Joint3 RandomMarkovJoint3(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                          std::size_t nz);

Kernel RandomKernel(std::mt19937_64& rng, std::size_t n_in, std::size_t n_out,
                    double zero_prob = 0.0);

// Each cell included independently with probability 1/2.
EventMask RandomEvent(std::mt19937_64& rng, std::size_t nx, std::size_t ny,
                      std::size_t nz);

// Random (W, X, Z) joint with Y attached through a random channel from X.
Joint4 RandomMarkovJoint4(std::mt19937_64& rng, std::size_t nw, std::size_t nx,
                          std::size_t ny, std::size_t nz);

}  // namespace alphami

#endif  // ALPHAMI_INSTANCES_H_
