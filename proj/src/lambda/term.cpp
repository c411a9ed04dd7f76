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

#include "pilab/lambda/term.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace pilab::lambda {

TermPtr var(std::string name) {
  return std::make_shared<const Term>(Term{Term::Kind::Var, std::move(name), nullptr, nullptr});
}

TermPtr lam(std::string binder, TermPtr body) {
  return std::make_shared<const Term>(Term{Term::Kind::Lam, std::move(binder), std::move(body), nullptr});
}

TermPtr lam(const std::vector<std::string>& binders, TermPtr body) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it) body = lam(*it, std::move(body));
  return body;
}

TermPtr app(TermPtr fun, TermPtr arg) {
  return std::make_shared<const Term>(Term{Term::Kind::App, {}, std::move(fun), std::move(arg)});
}

TermPtr app(TermPtr head, const std::vector<TermPtr>& args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}

namespace {

void collect_free(const Term& t, std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (!bound.count(t.name)) out.insert(t.name);
      return;
    case Term::Kind::Lam: {
      auto it = bound.insert(t.name);
      collect_free(*t.body(), bound, out);
      bound.erase(it);
      return;
    }
    case Term::Kind::App:
      collect_free(*t.fun(), bound, out);
      collect_free(*t.arg(), bound, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const Term& t, const std::string& x) {
  switch (t.kind) {
    case Term::Kind::Var:
      return t.name == x;
    case Term::Kind::Lam:
      return t.name != x && occurs_free(*t.body(), x);
    case Term::Kind::App:
      return occurs_free(*t.fun(), x) || occurs_free(*t.arg(), x);
  }
  return false;
}

std::size_t size(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
      return 1;
    case Term::Kind::Lam:
      return 1 + size(*t.body());
    case Term::Kind::App:
      return 1 + size(*t.fun()) + size(*t.arg());
  }
  return 0;
}

std::string fresh_variable(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base.substr(0, base.find('#'));
  for (int k = 1;; ++k) {
    std::string candidate = stem + "#" + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

TermPtr substitute(const TermPtr& m, const std::string& x, const TermPtr& n) {
  switch (m->kind) {
    case Term::Kind::Var:
      return m->name == x ? n : m;
    case Term::Kind::App: {
      auto f = substitute(m->fun(), x, n);
      auto a = substitute(m->arg(), x, n);
      if (f == m->fun() && a == m->arg()) return m;
      return app(std::move(f), std::move(a));
    }
    case Term::Kind::Lam: {
      if (m->name == x || !occurs_free(*m->body(), x)) return m;
      if (!occurs_free(*n, m->name)) {
        return lam(m->name, substitute(m->body(), x, n));
      }
      std::set<std::string> avoid = free_vars(*n);
      auto body_fv = free_vars(*m->body());
      avoid.insert(body_fv.begin(), body_fv.end());
      avoid.insert(x);
      std::string fresh = fresh_variable(m->name, avoid);
      auto renamed = substitute(m->body(), m->name, var(fresh));
      return lam(fresh, substitute(renamed, x, n));
    }
  }
  return m;
}

namespace {

void key_rec(const Term& t, std::vector<std::string>& scope, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var: {
      for (std::size_t i = scope.size(); i-- > 0;) {
        if (scope[i] == t.name) {
          out += '#';
          out += std::to_string(scope.size() - 1 - i);
          return;
        }
      }
      out += '$';
      out += t.name;
      out += ' ';
      return;
    }
    case Term::Kind::Lam:
      out += "L";
      scope.push_back(t.name);
      key_rec(*t.body(), scope, out);
      scope.pop_back();
      return;
    case Term::Kind::App:
      out += "(";
      key_rec(*t.fun(), scope, out);
      out += ' ';
      key_rec(*t.arg(), scope, out);
      out += ")";
      return;
  }
}

void print_rec(const Term& t, std::string& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      out += t.name;
      return;
    case Term::Kind::Lam: {
      out += "\\";
      const Term* cur = &t;
      bool first = true;
      while (cur->is_lam()) {
        if (!first) out += ' ';
        out += cur->name;
        first = false;
        cur = cur->body().get();
      }
      out += ". ";
      print_rec(*cur, out);
      return;
    }
    case Term::Kind::App: {
      const Term& f = *t.fun();
      const Term& a = *t.arg();
      if (f.is_lam()) {
        out += '(';
        print_rec(f, out);
        out += ')';
      } else {
        print_rec(f, out);
      }
      out += ' ';
      if (a.is_var()) {
        print_rec(a, out);
      } else {
        out += '(';
        print_rec(a, out);
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

std::string canonical_key(const Term& t) {
  std::vector<std::string> scope;
  std::string out;
  key_rec(t, scope, out);
  return out;
}

bool alpha_equal(const Term& a, const Term& b) { return canonical_key(a) == canonical_key(b); }

std::string to_string(const Term& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

namespace named {

TermPtr delta() { return lam("x", app(var("x"), var("x"))); }

TermPtr omega() { return app(delta(), delta()); }

TermPtr ogre() {
  auto half = lam(std::vector<std::string>{"x", "y"}, app(var("x"), var("x")));
  return app(half, half);
}

TermPtr y() {
  auto half = lam("x", app(var("f"), app(var("x"), var("x"))));
  return lam("f", app(half, half));
}

TermPtr einf() {
  auto step = lam(std::vector<std::string>{"f", "x", "y"}, app(var("x"), app(var("f"), var("y"))));
  return app(y(), step);
}

}  // namespace named

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TermPtr parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty term", pos_);
    auto t = parse_term();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_lambda() {
    if (at_end()) return false;
    if (text_[pos_] == '\\') return true;
    return text_.substr(pos_, 2) == "\xCE\xBB";  // UTF-8 lambda
  }

  void consume_lambda() { pos_ += text_[pos_] == '\\' ? 1 : 2; }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string parse_ident() {
    if (at_end() || !ident_start(text_[pos_])) throw ParseError("expected identifier", pos_);
    std::size_t start = pos_;
    while (!at_end() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_atom_start() {
    skip_ws();
    if (at_end()) return false;
    char c = text_[pos_];
    return c == '(' || ident_start(c) || at_lambda();
  }

  TermPtr parse_term() {
    TermPtr result = parse_atom();
    while (at_atom_start()) result = app(result, parse_atom());
    return result;
  }

  TermPtr parse_atom() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    if (at_lambda()) {
      consume_lambda();
      std::vector<std::string> binders;
      skip_ws();
      while (!at_end() && ident_start(text_[pos_])) {
        binders.push_back(parse_ident());
        skip_ws();
      }
      if (binders.empty()) throw ParseError("expected binder after lambda", pos_);
      if (at_end() || text_[pos_] != '.') throw ParseError("expected '.'", pos_);
      ++pos_;
      skip_ws();
      if (at_end()) throw ParseError("missing lambda body", pos_);
      return lam(binders, parse_term());
    }
    if (text_[pos_] == '(') {
      ++pos_;
      auto t = parse_term();
      skip_ws();
      if (at_end() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return t;
    }
    std::string id = parse_ident();
    if (id == "Omega") return named::omega();
    if (id == "Delta") return named::delta();
    if (id == "Ogre") return named::ogre();
    if (id == "Y") return named::y();
    if (id == "Einf") return named::einf();
    return var(std::move(id));
  }
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).parse(); }

}  // namespace pilab::lambda
