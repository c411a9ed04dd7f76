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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pilab/lambda/term.hpp"
#include "pilab/pi/process.hpp"
#include "pilab/wires/wires.hpp"

namespace pilab::enc {

using lambda::TermPtr;
using pi::Name;
using pi::ProcPtr;
using wires::Family;

enum class Variant : std::uint8_t { Milner, Abstract, Optimised };

std::string to_string(Variant v);
/// "milner", "abstract", "optimised" (or "optimized"); throws std::invalid_argument.
Variant parse_variant(std::string_view text);

/// Agent of the full pi-calculus, for Milner's encoding only: it needs
/// free output and is never handed to the pi-I machinery.
struct MilnerNode;
using MilnerPtr = std::shared_ptr<const MilnerNode>;
struct MilnerNode {
  enum class Kind : std::uint8_t { FreeOut, In, Repl, Res, Par };
  Kind kind = Kind::Par;
  std::string subject;
  std::vector<std::string> names;  // objects of FreeOut/In/Repl; bound names of Res
  std::vector<MilnerPtr> parts;
};
std::string to_string(const MilnerNode& m);

/// The abstraction (p)P encoding `source`, where p is `location`.
struct EncodedAgent {
  Variant variant = Variant::Abstract;
  Family family = Family::IO;
  TermPtr source;
  Name location;
  wires::SugarPtr sugared;  // empty for Milner
  ProcPtr process;          // desugared; empty for Milner
  MilnerPtr milner;         // Milner only

  const pi::ConstEnv& env() const { return wires::wire_env(family).consts; }
  /// The agent with its permeable prefixes and wires left folded.
  std::string sugared_text() const;
  /// The pi-I process (or Milner's pi process).
  std::string text() const;
};

EncodedAgent encode_milner(const TermPtr& m, const Name& p = pi::loc("p"));
EncodedAgent encode_abstract(Family f, const TermPtr& m, const Name& p = pi::loc("p"));
EncodedAgent encode_optimised(Family f, const TermPtr& m, const Name& p = pi::loc("p"));
EncodedAgent encode(Variant v, Family f, const TermPtr& m, const Name& p = pi::loc("p"));

/// p0!:(x1,p1) ... p(n-1)!:(xn,pn) (!x1(r1).A1<r1> | ... | !xn(rn).An<rn> | p->pn),
/// each Ai instantiated at a fresh location. `args` must be non-empty and
/// come from the same family.
ProcPtr encode_argchain(Family f, const Name& p0, const Name& p, const std::vector<EncodedAgent>& args);

nlohmann::json to_json(const EncodedAgent& a);

}  // namespace pilab::enc
