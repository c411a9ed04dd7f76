/*
 * Copyright 2026 The pilab Authors
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

#include "pilab/pi/parse.hpp"

#include <cctype>

namespace pilab::pi {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@' || c == '$' || c == '%';
}

bool ident_char(char c) {
  return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '\'' || c == '#' ||
         c == '^';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ProcPtr process() {
    auto p = parse_par();
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, peek()) + "'");
    return p;
  }

  std::vector<Definition> definitions() {
    std::vector<Definition> defs;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      Definition d;
      d.name = ident();
      expect('(');
      d.params = names(')');
      skip_ws();
      expect('=');
      d.body = parse_par();
      defs.push_back(std::move(d));
      skip_ws();
      if (at_end()) break;
      expect(';');
    }
    return defs;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool accept(std::string_view s) {
    skip_ws();
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    if (at_end() || !ident_start(peek())) fail("expected identifier");
    std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Name name() {
    std::string id = ident();
    Sort s = conventional_sort(id);
    if (text_.substr(pos_, 4) == ":Loc") {
      pos_ += 4;
      s = Sort::Loc;
    } else if (text_.substr(pos_, 4) == ":Var") {
      pos_ += 4;
      s = Sort::Var;
    }
    return {std::move(id), s};
  }

  std::vector<Name> names(char close) {
    std::vector<Name> out;
    skip_ws();
    if (!at_end() && peek() == close) {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(name());
      skip_ws();
      if (at_end()) fail("unterminated name list");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == close) {
        ++pos_;
        return out;
      }
      fail(std::string("expected ',' or '") + close + "'");
    }
  }

  bool at_keyword_nu() {
    skip_ws();
    if (text_.substr(pos_, 2) == "\xCE\xBD") return true;  // UTF-8 nu
    if (text_.substr(pos_, 2) != "nu") return false;
    std::size_t next = pos_ + 2;
    return next < text_.size() && !ident_char(text_[next]);
  }

  ProcPtr parse_par() {
    std::vector<ProcPtr> parts{parse_unit()};
    while (accept("|")) parts.push_back(parse_unit());
    if (parts.size() == 1) return parts.front();
    return par(std::move(parts));
  }

  ProcPtr parse_unit() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (peek() == '0' && (pos_ + 1 >= text_.size() || !ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return nil();
    }
    if (peek() == '(') {
      ++pos_;
      auto p = parse_par();
      expect(')');
      return p;
    }
    if (at_keyword_nu()) {
      pos_ += 2;
      std::vector<Name> bound;
      for (;;) {
        skip_ws();
        if (!at_end() && peek() == '.') break;
        if (!at_end() && peek() == ',') {
          ++pos_;
          continue;
        }
        bound.push_back(name());
      }
      if (bound.empty()) fail("expected name after nu");
      expect('.');
      return res(bound, parse_unit());
    }
    if (peek() == '!') {
      ++pos_;
      Name subject = name();
      expect('(');
      auto params = names(')');
      expect('.');
      return repl(std::move(subject), std::move(params), parse_unit());
    }
    std::size_t start = pos_;
    std::string id = ident();
    skip_ws();
    if (!at_end() && peek() == '<') {
      ++pos_;
      return call(std::move(id), names('>'));
    }
    pos_ = start;
    Name subject = name();
    skip_ws();
    if (accept("!(")) {
      auto params = names(')');
      expect('.');
      return output(std::move(subject), std::move(params), parse_unit());
    }
    expect('(');
    auto params = names(')');
    expect('.');
    return input(std::move(subject), std::move(params), parse_unit());
  }
};

}  // namespace

ProcPtr parse_process(std::string_view text) { return Parser(text).process(); }

std::vector<Definition> parse_definitions(std::string_view text) { return Parser(text).definitions(); }

}  // namespace pilab::pi
