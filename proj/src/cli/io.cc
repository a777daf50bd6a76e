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
#include "cli/io.h"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "alphami/error.h"
#include "json.hpp"

namespace alphami::cli {
namespace {

using nlohmann::json;

json ParseDocument(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorKind::kParse, source + ":" + std::to_string(line) + ":" +
                                       std::to_string(column) + ": malformed document");
  }
}

const json& Field(const json& doc, const char* name, const std::string& source) {
  if (!doc.is_object()) throw Error(ErrorKind::kParse, source + ": expected an object");
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw Error(ErrorKind::kParse, source + ": missing field '" + name + "'");
  }
  return *it;
}

Labels ReadLabels(const json& doc, const char* name, const std::string& source) {
  const json& v = Field(doc, name, source);
  if (!v.is_array() || v.empty()) {
    throw Error(ErrorKind::kParse,
                source + ": field '" + name + "' must be a nonempty array of strings");
  }
  Labels labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw Error(ErrorKind::kParse, source + ": field '" + name + "' entry " +
                                         std::to_string(i) + " is not a string");
    }
    std::string label = v[i].get<std::string>();
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::kValidation,
                  source + ": field '" + name + "' repeats label '" + label + "'");
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

std::vector<double> ReadNumbers(const json& v, const std::string& where,
                                const std::string& source) {
  if (!v.is_array()) {
    throw Error(ErrorKind::kParse, source + ": " + where + " must be an array of numbers");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw Error(ErrorKind::kParse, source + ": " + where + " entry " +
                                         std::to_string(i) + " is not a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

// Rejects negative or non-finite entries and a mass off by more than the
// tolerance; otherwise rescales to unit mass.
void Normalize(std::vector<double>& p, const std::string& where,
               const std::string& source) {
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i])) {
      throw Error(ErrorKind::kValidation,
                  source + ": " + where + " entry " + std::to_string(i) + " is not finite");
    }
    if (p[i] < 0.0) {
      throw Error(ErrorKind::kValidation,
                  source + ": " + where + " entry " + std::to_string(i) + " is negative");
    }
    total += p[i];
  }
  if (std::abs(total - 1.0) > kInputMassTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << source << ": " << where << " has total mass " << total << ", not 1";
    throw Error(ErrorKind::kValidation, msg.str());
  }
  for (double& v : p) v /= total;
}

}  // namespace

Joint3 ParseJoint(const std::string& text, const std::string& source) {
  const json doc = ParseDocument(text, source);
  Labels x = ReadLabels(doc, "x_labels", source);
  Labels y = ReadLabels(doc, "y_labels", source);
  Labels z = ReadLabels(doc, "z_labels", source);
  std::vector<double> probs = ReadNumbers(Field(doc, "probs", source), "field 'probs'", source);
  const std::size_t expected = x.size() * y.size() * z.size();
  if (probs.size() != expected) {
    throw Error(ErrorKind::kValidation,
                source + ": field 'probs' has " + std::to_string(probs.size()) +
                    " entries, expected " + std::to_string(expected));
  }
  Normalize(probs, "field 'probs'", source);
  return Joint3(std::move(x), std::move(y), std::move(z), std::move(probs));
}

Kernel ParseChannel(const std::string& text, const std::string& source) {
  const json doc = ParseDocument(text, source);
  Labels in = ReadLabels(doc, "in_labels", source);
  Labels out = ReadLabels(doc, "out_labels", source);
  const json& rows = Field(doc, "rows", source);
  if (!rows.is_array() || rows.size() != in.size()) {
    throw Error(ErrorKind::kParse,
                source + ": field 'rows' must hold one array per input label");
  }
  std::vector<double> flat;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = "row " + std::to_string(i);
    std::vector<double> row = ReadNumbers(rows[i], where, source);
    if (row.size() != out.size()) {
      throw Error(ErrorKind::kValidation,
                  source + ": " + where + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(out.size()));
    }
    Normalize(row, where, source);
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Kernel(std::move(in), std::move(out), std::move(flat));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kResource, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Joint3 LoadJoint(const std::string& path) { return ParseJoint(ReadFile(path), path); }

Kernel LoadChannel(const std::string& path) { return ParseChannel(ReadFile(path), path); }

}  // namespace alphami::cli
