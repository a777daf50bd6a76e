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
// Reports: a block of "key: value" header lines, a blank line, then
// tab-separated rows
//
//   operation  argument  quantity  value  check
//
// where check is PASS or FAIL for asserted inequalities and "-" otherwise.
// Numbers carry 12 significant digits.
#ifndef ALPHAMI_CLI_REPORT_H_
#define ALPHAMI_CLI_REPORT_H_

#include <string>
#include <utility>
#include <vector>

namespace alphami::cli {

std::string FormatNumber(double v);

// Lowercase hex SHA-256 of `bytes`.
std::string Sha256Hex(const std::string& bytes);

class Report {
 public:
  void Set(std::string key, std::string value);

  void Value(std::string operation, std::string argument, std::string quantity,
             double value);
  void Text(std::string operation, std::string argument, std::string quantity,
            std::string value);
  void Check(std::string operation, std::string argument, std::string quantity,
             double value, bool passed);

  bool AllPassed() const { return failures_ == 0; }
  int checks() const { return checks_; }
  int failures() const { return failures_; }

  // Header lines, then "checks", "failures" and "status", then the rows.
  std::string Render() const;

 private:
  struct Row {
    std::string operation, argument, quantity, value, check;
  };
  std::vector<std::pair<std::string, std::string>> header_;
  std::vector<Row> rows_;
  int checks_ = 0;
  int failures_ = 0;
};

}  // namespace alphami::cli

#endif  // ALPHAMI_CLI_REPORT_H_
