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
#include "alphami/alpha.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "alphami/error.h"

namespace alphami {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape:
      return "shape";
    case ErrorKind::kValidation:
      return "validation";
    case ErrorKind::kParse:
      return "parse";
    case ErrorKind::kResource:
      return "resource";
    case ErrorKind::kPrecondition:
      return "precondition";
  }
  return "unknown";
}

Alpha Alpha::Finite(double value) {
  if (!std::isfinite(value) || value <= 0.0 || value == 1.0) {
    throw Error(ErrorKind::kValidation,
                "alpha must be finite, positive and different from 1, got " +
                    std::to_string(value));
  }
  return Alpha(Kind::kFinite, value);
}

Alpha Alpha::Infinity() {
  return Alpha(Kind::kInfinity, std::numeric_limits<double>::infinity());
}

Alpha Alpha::Parse(std::string_view text) {
  std::string lower;
  for (char c : text) {
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lower == "one" || lower == "1") return One();
  if (lower == "inf" || lower == "infinity") return Infinity();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(lower.data(), lower.data() + lower.size(), value);
  if (ec != std::errc() || ptr != lower.data() + lower.size()) {
    throw Error(ErrorKind::kParse, "cannot parse alpha '" + std::string(text) + "'");
  }
  return Finite(value);
}

std::string Alpha::ToString() const {
  switch (kind_) {
    case Kind::kOne:
      return "one";
    case Kind::kInfinity:
      return "inf";
    case Kind::kFinite:
      break;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value_);
  return buf;
}

double Alpha::HolderExponent() const {
  switch (kind_) {
    case Kind::kOne:
      return 0.0;
    case Kind::kInfinity:
      return 1.0;
    case Kind::kFinite:
      break;
  }
  return (value_ - 1.0) / value_;
}

}  // namespace alphami
