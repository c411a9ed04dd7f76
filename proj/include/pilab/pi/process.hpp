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

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pilab::pi {

enum class Sort : std::uint8_t { Loc, Var };

/// Sort implied by a spelling: the first letter in u..z means Var.
Sort conventional_sort(std::string_view id);

struct Name {
  std::string id;
  Sort sort = Sort::Loc;

  auto operator<=>(const Name&) const = default;
};

inline Name loc(std::string id) { return {std::move(id), Sort::Loc}; }
inline Name vname(std::string id) { return {std::move(id), Sort::Var}; }

/// Spelling, with a ":Loc" / ":Var" suffix when it disagrees with the convention.
std::string to_string(const Name& n);

enum class Polarity : std::uint8_t { In = 1, Out = 2 };
using PolaritySet = std::uint8_t;  // bit mask of Polarity values

inline Polarity opposite(Polarity p) { return p == Polarity::In ? Polarity::Out : Polarity::In; }

struct Proc;
using ProcPtr = std::shared_ptr<const Proc>;

/// Agent of the internal pi-calculus. Every output binds its objects.
struct Proc {
  enum class Kind : std::uint8_t { Nil, In, Out, Res, Par, Repl, Const };
  Kind kind = Kind::Nil;
  Name subject;              // channel of In/Out/Repl; the bound name of Res
  std::vector<Name> names;   // params of In/Out/Repl; arguments of Const
  std::string constant;      // Const only
  std::vector<ProcPtr> parts;  // single body for In/Out/Repl/Res; components for Par

  const ProcPtr& body() const { return parts.front(); }
  bool is_prefix() const { return kind == Kind::In || kind == Kind::Out || kind == Kind::Repl; }
};

ProcPtr nil();
ProcPtr input(Name subject, std::vector<Name> params, ProcPtr body);
ProcPtr output(Name subject, std::vector<Name> params, ProcPtr body);
ProcPtr repl(Name subject, std::vector<Name> params, ProcPtr body);
ProcPtr res(Name bound, ProcPtr body);
ProcPtr res(const std::vector<Name>& bound, ProcPtr body);
ProcPtr par(std::vector<ProcPtr> parts);
ProcPtr par(ProcPtr a, ProcPtr b);
ProcPtr call(std::string constant, std::vector<Name> args);

class PiError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public PiError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : PiError(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct Definition {
  std::string name;
  std::vector<Name> params;
  ProcPtr body;
};

/// Static over-approximation of what a constant can do first, plus how
/// each parameter is used anywhere in its unfolding.
struct ConstInfo {
  std::set<std::pair<std::size_t, Polarity>> initial;
  bool tau = false;
  std::vector<PolaritySet> usage;
};

/// Immutable table of recursive definitions. Copies share storage.
class ConstEnv {
 public:
  ConstEnv();
  explicit ConstEnv(std::vector<Definition> defs);

  const Definition* find(const std::string& name) const;
  const Definition& at(const std::string& name) const;  // throws PiError
  const ConstInfo& info(const std::string& name) const;
  const std::map<std::string, ConstInfo>& table() const;
  std::vector<std::string> names() const;
  ConstEnv extended(std::vector<Definition> more) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

std::set<Name> free_names(const Proc& p);
/// As above, and checks that every constant is defined.
std::set<Name> free_names(const Proc& p, const ConstEnv& env);
bool occurs_free(const Proc& p, const Name& n);

/// Deterministic supply of names "<prefix><sortchar><k>".
class NameSupply {
 public:
  explicit NameSupply(std::string prefix, std::size_t next = 0)
      : prefix_(std::move(prefix)), next_(next) {}
  Name fresh(Sort s);
  std::size_t next() const { return next_; }

 private:
  std::string prefix_;
  std::size_t next_;
};

/// Capture-avoiding simultaneous renaming of free names. Binders that would
/// capture a name in the range are renamed from `supply`.
ProcPtr rename(const ProcPtr& p, const std::map<Name, Name>& sub, NameSupply& supply);

/// Text form accepted by parse_process.
std::string to_string(const Proc& p);

std::size_t size(const Proc& p);

}  // namespace pilab::pi
