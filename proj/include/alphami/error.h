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
#ifndef ALPHAMI_ERROR_H_
#define ALPHAMI_ERROR_H_

#include <stdexcept>
#include <string>

namespace alphami {

enum class ErrorKind {
  kShape,         // operands live on different alphabets
  kValidation,    // a value violates a type invariant
  kParse,         // malformed input text
  kResource,      // a configured size cap would be exceeded
  kPrecondition,  // a structural assumption (Markov chain, alpha range) fails
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type. The kind is
// what the command line front end turns into its machine-readable record.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace alphami

#endif  // ALPHAMI_ERROR_H_
