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

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pilab/pi/process.hpp"

namespace pilab::wires {

using pi::Name;
using pi::ProcPtr;

enum class Family : std::uint8_t { IO, OI, P };

inline constexpr std::array<Family, 3> kFamilies{Family::IO, Family::OI, Family::P};

std::string to_string(Family f);
/// Accepts "IO", "OI", "P" in any case; throws std::invalid_argument.
Family parse_family(std::string_view text);

/// The recursive wire constants of one family, stored desugared.
struct WireEnv {
  Family family = Family::IO;
  pi::ConstEnv consts;
  std::string loc_wire;  // constant name of a->b on locations
  std::string var_wire;  // constant name of x->y on variables
};

/// Shared, immutable environment for `f`.
const WireEnv& wire_env(Family f);

ProcPtr make_loc_wire(const WireEnv& w, const Name& a, const Name& b);
ProcPtr make_var_wire(const WireEnv& w, const Name& x, const Name& y);

enum class Permeable : std::uint8_t { InLoc, OutLoc, InVar, OutVar };

/// A permeable prefix followed by `body`, expanded into ordinary prefixes
/// and the family's wires.
ProcPtr permeable(const WireEnv& w, Permeable kind, const Name& subject, const std::vector<Name>& bound,
                  ProcPtr body);

// Agents that may still contain wires and permeable prefixes.
struct Sugar;
using SugarPtr = std::shared_ptr<const Sugar>;

struct Sugar {
  enum class Kind : std::uint8_t { Nil, In, Out, Repl, Res, Par, Wire, PermIn, PermOut };
  Kind kind = Kind::Nil;
  Name subject;              // prefix subject; bound name of Res
  std::vector<Name> names;   // prefix params; the two ends of a Wire
  std::vector<SugarPtr> parts;

  const SugarPtr& body() const { return parts.front(); }
};

namespace sugar {
SugarPtr nil();
SugarPtr in(Name subject, std::vector<Name> params, SugarPtr body);
SugarPtr out(Name subject, std::vector<Name> params, SugarPtr body);
SugarPtr repl(Name subject, std::vector<Name> params, SugarPtr body);
SugarPtr res(Name bound, SugarPtr body);
SugarPtr par(std::vector<SugarPtr> parts);
SugarPtr wire(Name a, Name b);
SugarPtr perm_in(Name subject, std::vector<Name> bound, SugarPtr body);
SugarPtr perm_out(Name subject, std::vector<Name> bound, SugarPtr body);
}  // namespace sugar

/// Prints wires as "a->b", permeable input as "p:(x,q).P" and permeable
/// output as "p!:(x,q).P".
std::string to_string(const Sugar& s);

ProcPtr desugar(const WireEnv& w, const Sugar& s);

struct SugaredDefinition {
  std::string name;
  std::vector<Name> params;
  SugarPtr body;
};

/// The family's wire definitions written with permeable prefixes; the
/// location wire first.
std::vector<SugaredDefinition> sugared_definitions(Family f);

/// Swaps every non-replicated input with the matching bound output and the
/// two arguments of every wire, renaming the wire constants. The location
/// wire's parameters are reversed as well; the variable wire keeps its own.
std::vector<pi::Definition> dual_definitions(const WireEnv& w, const std::string& loc_name,
                                             const std::string& var_name);

}  // namespace pilab::wires
