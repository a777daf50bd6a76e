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
// A seeded property suite over every module, sized to run in seconds.
#ifndef ALPHAMI_SELFTEST_H_
#define ALPHAMI_SELFTEST_H_

#include <cstdint>
#include <string>
#include <vector>

namespace alphami {

struct SelftestCheck {
  std::string name;
  int cases = 0;
  // Largest violation observed: a deviation for equalities, or how far an
  // inequality was missed (negative or zero when it held).
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

std::vector<SelftestCheck> RunSelftest(uint64_t seed);

}  // namespace alphami

#endif  // ALPHAMI_SELFTEST_H_
