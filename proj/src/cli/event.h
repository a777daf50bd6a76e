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
// Event expressions over the cells of a joint:
//
//   expr    := conj ( "||" conj )*
//   conj    := unary ( "&&" unary )*
//   unary   := "!" unary | primary
//   primary := "(" expr ")" | compare
//   compare := var ( "==" | "!=" ) operand
//   operand := var | label
//   var     := "x" | "y" | "z"
//
// A label is a bare word of letters, digits and "_.+-", or a single- or
// double-quoted string (needed for labels spelled x, y or z). Comparing two
// variables compares their label strings.
#ifndef ALPHAMI_CLI_EVENT_H_
#define ALPHAMI_CLI_EVENT_H_

#include <string>

#include "alphami/prob.h"

namespace alphami::cli {

// Throws Error(kParse) with the column of a syntax error, or
// Error(kValidation) for a label the variable does not carry.
EventMask ParseEvent(const std::string& text, const Joint3& j);

}  // namespace alphami::cli

#endif  // ALPHAMI_CLI_EVENT_H_
