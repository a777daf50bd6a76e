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
#ifndef ALPHAMI_EXECUTION_H_
#define ALPHAMI_EXECUTION_H_

#include <cstdint>
#include <random>

namespace alphami {

// Selects between the OpenMP kernel and the serial reference loop. Both
// produce bit-identical results; the serial path is kept for testing and
// benchmarking.
enum class Execution { kSerial, kParallel };

// Number of OpenMP threads available, 1 when built without OpenMP.
int MaxThreads();

// Independent, reproducible engine for work item `index` of stream `stream`.
// Parallel loops draw from one engine per item, so results do not depend on
// the schedule.
std::mt19937_64 ItemEngine(uint64_t seed, uint64_t stream, uint64_t index);

}  // namespace alphami

#endif  // ALPHAMI_EXECUTION_H_
