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
// Input files. A joint is a JSON object
//
//   {"x_labels": [...], "y_labels": [...], "z_labels": [...], "probs": [...]}
//
// with probs flattened x-major, then y, then z. A channel is
//
//   {"in_labels": [...], "out_labels": [...], "rows": [[...], ...]}
//
// with one row per input label.
#ifndef ALPHAMI_CLI_IO_H_
#define ALPHAMI_CLI_IO_H_

#include <string>

#include "alphami/prob.h"

namespace alphami::cli {

// Entries may miss unit mass by up to this much and are then rescaled.
inline constexpr double kInputMassTolerance = 1e-9;

// Parse failures throw Error(kParse) with a line and column or the offending
// field; violated invariants throw Error(kValidation).
Joint3 ParseJoint(const std::string& text, const std::string& source);
Kernel ParseChannel(const std::string& text, const std::string& source);

std::string ReadFile(const std::string& path);
Joint3 LoadJoint(const std::string& path);
Kernel LoadChannel(const std::string& path);

}  // namespace alphami::cli

#endif  // ALPHAMI_CLI_IO_H_
