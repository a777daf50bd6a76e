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
#include "cli/report.h"

#include <openssl/evp.h>

#include <cstdio>
#include <sstream>

#include "alphami/error.h"

namespace alphami::cli {

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::kResource, "SHA-256 digest failed");
  }
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

void Report::Set(std::string key, std::string value) {
  header_.emplace_back(std::move(key), std::move(value));
}

void Report::Value(std::string operation, std::string argument, std::string quantity,
                   double value) {
  rows_.push_back({std::move(operation), std::move(argument), std::move(quantity),
                   FormatNumber(value), "-"});
}

void Report::Text(std::string operation, std::string argument, std::string quantity,
                  std::string value) {
  rows_.push_back({std::move(operation), std::move(argument), std::move(quantity),
                   std::move(value), "-"});
}

void Report::Check(std::string operation, std::string argument, std::string quantity,
                   double value, bool passed) {
  ++checks_;
  if (!passed) ++failures_;
  rows_.push_back({std::move(operation), std::move(argument), std::move(quantity),
                   FormatNumber(value), passed ? "PASS" : "FAIL"});
}

std::string Report::Render() const {
  std::ostringstream out;
  for (const auto& [k, v] : header_) out << k << ": " << v << '\n';
  out << "checks: " << checks_ << '\n';
  out << "failures: " << failures_ << '\n';
  out << "status: " << (AllPassed() ? "PASS" : "FAIL") << '\n';
  out << '\n';
  out << "operation\targument\tquantity\tvalue\tcheck\n";
  for (const Row& r : rows_) {
    out << r.operation << '\t' << r.argument << '\t' << r.quantity << '\t' << r.value
        << '\t' << r.check << '\n';
  }
  return out.str();
}

}  // namespace alphami::cli
