/*
 * Copyright 2026 The gl2modrep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "gl2modrep_cli/term_parser.hpp"

#include <cctype>
#include <sstream>

namespace gl2modrep::cli {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }
  }

  Expr parse() {
    if (s_.empty()) fail("empty expression");
    Expr out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    while (true) {
      RawTerm t = term();
      if (negative) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      if (pos_ == s_.size()) break;
      const char c = s_[pos_++];
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      negative = c == '-';
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ArgumentError("term syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  std::int64_t integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    try {
      return std::stoll(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  RawTerm term() {
    RawTerm t;
    while (true) {
      const char c = peek();
      if (c == 'e') {
        ++pos_;
        std::int64_t m = 1;
        if (peek() == '^') {
          ++pos_;
          m = integer();
        }
        t.m += m;
      } else if (c == 'M') {
        ++pos_;
        Factor f;
        f.k = integer();
        if (peek() == '[') {
          ++pos_;
          f.twist = integer();
          if (peek() != ']') fail("expected ']'");
          ++pos_;
        }
        t.factors.push_back(f);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= Integer(integer());
      } else {
        fail("expected a factor");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return t;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::int64_t to_int(const std::string& s) {
  const std::string t = trim(s);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw ArgumentError("not an integer: '" + s + "'");
  }
  if (used != t.size()) throw ArgumentError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = to_int(text);
    return {v, v};
  }
  const auto a = to_int(text.substr(0, dots)), b = to_int(text.substr(dots + 2));
  if (a > b) throw ArgumentError("empty range '" + text + "'");
  return {a, b};
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(text, ',')) out.push_back(to_int(item));
  if (out.empty()) throw ArgumentError("empty list");
  return out;
}

std::vector<std::vector<std::int64_t>> parse_blocks(const std::string& text) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& block : split(text, ';')) out.push_back(parse_int_list(block));
  return out;
}

std::vector<std::vector<std::string>> parse_word_blocks(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  for (const auto& block : split(text, ';')) {
    std::vector<std::string> words;
    for (const auto& w : split(block, ',')) words.push_back(trim(w));
    out.push_back(std::move(words));
  }
  return out;
}

}  // namespace gl2modrep::cli
