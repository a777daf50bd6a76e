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
#include "cli/event.h"

#include <algorithm>
#include <cctype>
#include <vector>

#include "alphami/error.h"

namespace alphami::cli {
namespace {

enum class Tok { kVar, kLabel, kEq, kNe, kAnd, kOr, kNot, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool IsLabelChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '+' ||
         c == '-';
}

[[noreturn]] void Fail(std::size_t column, const std::string& what) {
  throw Error(ErrorKind::kParse, "event column " + std::to_string(column) + ": " + what);
}

std::vector<Token> Lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (s.compare(i, 2, "==") == 0) {
      out.push_back({Tok::kEq, "==", col});
      i += 2;
    } else if (s.compare(i, 2, "!=") == 0) {
      out.push_back({Tok::kNe, "!=", col});
      i += 2;
    } else if (s.compare(i, 2, "&&") == 0) {
      out.push_back({Tok::kAnd, "&&", col});
      i += 2;
    } else if (s.compare(i, 2, "||") == 0) {
      out.push_back({Tok::kOr, "||", col});
      i += 2;
    } else if (c == '!') {
      out.push_back({Tok::kNot, "!", col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::kLParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::kRParen, ")", col});
      ++i;
    } else if (c == '"' || c == '\'') {
      const std::size_t close = s.find(c, i + 1);
      if (close == std::string::npos) Fail(col, "unterminated quoted label");
      out.push_back({Tok::kLabel, s.substr(i + 1, close - i - 1), col});
      i = close + 1;
    } else if (IsLabelChar(c)) {
      std::size_t j = i;
      while (j < s.size() && IsLabelChar(s[j])) ++j;
      std::string word = s.substr(i, j - i);
      const bool var = word == "x" || word == "y" || word == "z";
      out.push_back({var ? Tok::kVar : Tok::kLabel, std::move(word), col});
      i = j;
    } else {
      Fail(col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", s.size() + 1});
  return out;
}

// Evaluates directly into cell masks while parsing.
class Parser {
 public:
  Parser(std::vector<Token> tokens, const Joint3& j) : toks_(std::move(tokens)), j_(j) {}

  std::vector<char> Parse() {
    std::vector<char> m = Expr();
    if (Peek().kind != Tok::kEnd) Fail(Peek().column, "unexpected '" + Peek().text + "'");
    return m;
  }

 private:
  const Token& Peek() const { return toks_[pos_]; }
  const Token& Next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }

  std::vector<char> Expr() {
    std::vector<char> m = Conj();
    while (Peek().kind == Tok::kOr) {
      Next();
      const std::vector<char> r = Conj();
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m[i] || r[i];
    }
    return m;
  }

  std::vector<char> Conj() {
    std::vector<char> m = Unary();
    while (Peek().kind == Tok::kAnd) {
      Next();
      const std::vector<char> r = Unary();
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m[i] && r[i];
    }
    return m;
  }

  std::vector<char> Unary() {
    if (Peek().kind == Tok::kNot) {
      Next();
      std::vector<char> m = Unary();
      for (char& c : m) c = !c;
      return m;
    }
    return Primary();
  }

  std::vector<char> Primary() {
    if (Peek().kind == Tok::kLParen) {
      const std::size_t col = Next().column;
      std::vector<char> m = Expr();
      if (Peek().kind != Tok::kRParen) Fail(col, "unbalanced '('");
      Next();
      return m;
    }
    return Compare();
  }

  const Labels& LabelsOf(const std::string& var) const {
    if (var == "x") return j_.x_labels();
    if (var == "y") return j_.y_labels();
    return j_.z_labels();
  }

  static std::size_t Coord(const std::string& var, std::size_t x, std::size_t y,
                           std::size_t z) {
    if (var == "x") return x;
    if (var == "y") return y;
    return z;
  }

  std::vector<char> Compare() {
    const Token lhs = Next();
    if (lhs.kind != Tok::kVar) Fail(lhs.column, "expected x, y or z");
    const Token op = Next();
    if (op.kind != Tok::kEq && op.kind != Tok::kNe) Fail(op.column, "expected == or !=");
    const Token rhs = Next();
    if (rhs.kind != Tok::kVar && rhs.kind != Tok::kLabel) {
      Fail(rhs.column, "expected a variable or a label");
    }
    const Labels& left = LabelsOf(lhs.text);
    std::size_t target = 0;
    if (rhs.kind == Tok::kLabel) {
      const auto it = std::find(left.begin(), left.end(), rhs.text);
      if (it == left.end()) {
        throw Error(ErrorKind::kValidation, "event column " + std::to_string(rhs.column) +
                                                ": variable " + lhs.text +
                                                " has no label '" + rhs.text + "'");
      }
      target = static_cast<std::size_t>(it - left.begin());
    }
    std::vector<char> m(j_.size(), 0);
    for (std::size_t x = 0; x < j_.nx(); ++x) {
      for (std::size_t y = 0; y < j_.ny(); ++y) {
        for (std::size_t z = 0; z < j_.nz(); ++z) {
          const std::size_t a = Coord(lhs.text, x, y, z);
          const bool equal = rhs.kind == Tok::kLabel
                                 ? a == target
                                 : left[a] == LabelsOf(rhs.text)[Coord(rhs.text, x, y, z)];
          m[j_.Index(x, y, z)] = (op.kind == Tok::kEq) == equal;
        }
      }
    }
    return m;
  }

  std::vector<Token> toks_;
  const Joint3& j_;
  std::size_t pos_ = 0;
};

}  // namespace

EventMask ParseEvent(const std::string& text, const Joint3& j) {
  Parser p(Lex(text), j);
  return EventMask(j.nx(), j.ny(), j.nz(), p.Parse());
}

}  // namespace alphami::cli
