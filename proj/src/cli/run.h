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
// Command dispatch for the alphami tool.
#ifndef ALPHAMI_CLI_RUN_H_
#define ALPHAMI_CLI_RUN_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace alphami::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  std::string command;  // measure, bound, sdpi, simulate, exponent, selftest
  std::string input;
  std::vector<std::string> alphas;  // empty: the command default
  std::string event;
  uint64_t seed = 0;
  double grid_step = 0.01;
  int budget = 10'000;
  int n = 4;
  std::string tau = "0";
  std::string output;  // empty: write to the `out` stream
  std::string thm = "3";
  std::string channel;
  int trials = 10'000;
  std::vector<double> e_q;
  std::vector<double> e_p;
};

const std::vector<std::string>& Commands();

// Writes the report and returns kExitPass iff every asserted inequality
// holds. Library errors become a one-line JSON record on `err` and
// kExitError.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace alphami::cli

#endif  // ALPHAMI_CLI_RUN_H_
