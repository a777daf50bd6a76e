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
#ifndef ALPHAMI_ALPHA_H_
#define ALPHAMI_ALPHA_H_

#include <string>
#include <string_view>

namespace alphami {

// Order parameter of the Renyi family. Finite orders are positive and
// different from one; the KL order and the sup order are symbolic so that no
// code path ever evaluates a finite-order formula at 1 or at infinity.
class Alpha {
 public:
  enum class Kind { kFinite, kOne, kInfinity };

  // Throws Error(kValidation) unless 0 < value < inf and value != 1.
  static Alpha Finite(double value);
  static Alpha One() { return Alpha(Kind::kOne, 1.0); }
  static Alpha Infinity();

  // Accepts "one", "inf"/"infinity" or a decimal number.
  static Alpha Parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_one() const { return kind_ == Kind::kOne; }
  bool is_infinity() const { return kind_ == Kind::kInfinity; }

  // 1 for the KL order, +inf for the sup order.
  double value() const { return value_; }

  // Finite orders print with 12 significant digits.
  std::string ToString() const;

  // (alpha - 1) / alpha, the Holder exponent shared by all bounds; 0 for the
  // KL order and 1 for the sup order.
  double HolderExponent() const;

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  Alpha(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

}  // namespace alphami

#endif  // ALPHAMI_ALPHA_H_
