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
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pilab/pi/normalize.hpp"
#include "pilab/pi/process.hpp"

namespace pilab::pi {

struct Action {
  enum class Kind : std::uint8_t { Tau, In, Out };
  Kind kind = Kind::Tau;
  Name subject;
  std::vector<Name> bound;

  auto operator<=>(const Action&) const = default;

  static Action tau() { return {}; }
  bool visible() const { return kind != Kind::Tau; }
};

/// "tau", "p(x,q)" or "p!(x,q)".
std::string to_string(const Action& a);

struct Transition {
  Action action;
  Canonical target;
};

/// Name given to the i-th bound object of a visible action when the supply
/// starts at `base`: "$p<base+i>" or "$x<base+i>".
Name placeholder(Sort s, std::size_t base, std::size_t i);

/// Ground transitions: one fresh instantiation per visible action, bound
/// objects drawn from the placeholder supply at `base`. Targets are
/// canonical and the list is sorted by action, then target.
std::vector<Transition> transitions(const ProcPtr& p, const ConstEnv& env, std::size_t base = 0,
                                    const NormalizeOptions& opts = {});

enum class StepFilter : std::uint8_t { All, TauOnly, VisibleOnly };

/// As transitions(), for a state that is already canonical.
std::vector<Transition> canonical_transitions(const Canonical& state, const ConstEnv& env, std::size_t base,
                                              StepFilter filter = StepFilter::All, const NormalizeOptions& opts = {});

/// Selects the visible action a weak move must end with, or the hat-tau move.
struct ActionPattern {
  Action::Kind kind = Action::Kind::Tau;
  std::optional<Name> subject;  // any subject when empty

  bool matches(const Action& a) const {
    return a.kind == kind && (!subject || a.subject == *subject);
  }
};

/// All Q with P ==> -a-> ==> Q using at most `tau_budget` tau steps in total.
/// For the tau pattern, zero or more tau steps (P itself included).
/// Results are canonical, deduplicated and sorted by key.
std::vector<Canonical> weak_transitions(const ProcPtr& p, const ConstEnv& env, const ActionPattern& pattern,
                                        std::size_t tau_budget, std::size_t base = 0,
                                        const NormalizeOptions& opts = {});

}  // namespace pilab::pi
