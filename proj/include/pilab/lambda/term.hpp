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

#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pilab::lambda {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Untyped lambda term with named binders. Terms are immutable and shared.
struct Term {
  enum class Kind { Var, Lam, App };

  Kind kind;
  std::string name;  // variable name (Var) or binder (Lam)
  TermPtr left;      // Lam body, or App function
  TermPtr right;     // App argument

  bool is_var() const { return kind == Kind::Var; }
  bool is_lam() const { return kind == Kind::Lam; }
  bool is_app() const { return kind == Kind::App; }
  const TermPtr& body() const { return left; }
  const TermPtr& fun() const { return left; }
  const TermPtr& arg() const { return right; }
};

TermPtr var(std::string name);
TermPtr lam(std::string binder, TermPtr body);
TermPtr lam(const std::vector<std::string>& binders, TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr app(TermPtr head, const std::vector<TermPtr>& args);

std::set<std::string> free_vars(const Term& t);
bool occurs_free(const Term& t, const std::string& x);
std::size_t size(const Term& t);

/// Smallest "base#k" (k >= 1) not in `avoid`; `base` itself is stripped of
/// any previous "#k" suffix first.
std::string fresh_variable(const std::string& base,
                           const std::set<std::string>& avoid);

/// Capture-avoiding m[n/x].
TermPtr substitute(const TermPtr& m, const std::string& x, const TermPtr& n);

/// De Bruijn style key: bound variables become indices, free variables keep
/// their names. Two terms are alpha-equivalent iff their keys are equal.
std::string canonical_key(const Term& t);
bool alpha_equal(const Term& a, const Term& b);

std::string to_string(const Term& t);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: T ::= var | "\" var+ "." T | T T | "(" T ")". Application is
/// left-associative and a lambda body extends as far right as possible.
/// "λ" is accepted as an alternative to "\". The identifiers Omega, Delta,
/// Ogre, Y and Einf denote predefined closed terms.
TermPtr parse_term(std::string_view text);

namespace named {
TermPtr delta();  // \x. x x
TermPtr omega();  // Delta Delta
TermPtr ogre();   // (\x y. x x)(\x y. x x)
TermPtr y();      // \f. (\x. f (x x)) (\x. f (x x))
TermPtr einf();   // Y (\f x y. x (f y))
}  // namespace named

}  // namespace pilab::lambda
