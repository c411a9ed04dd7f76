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
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pilab/pi/lts.hpp"
#include "pilab/pi/process.hpp"

namespace pilab::equiv {

using pi::ConstEnv;
using pi::ProcPtr;

enum class Relation : std::uint8_t { Strong, Weak, Expansion };

std::string to_string(Relation r);
/// "strong", "weak", "expand"/"expansion"; throws std::invalid_argument.
Relation parse_relation(std::string_view text);

struct Budget {
  std::size_t depth = 3;        // attacker moves
  std::size_t tau = 16;         // tau steps absorbable by one weak answer
  std::size_t state_cap = 20000;  // distinct states per side
};

/// Simplifications applied to game states beyond structural congruence.
struct UpTo {
  /// Wire constants whose restricted chains are contracted in weak and
  /// expansion games; ignored by the strong game. An expansion refutation
  /// found this way is confirmed on uncontracted states before it is
  /// reported.
  std::set<std::string> transitive;
};

struct Witness;
using WitnessPtr = std::shared_ptr<const Witness>;

/// One defender answer and the strategy that beats it.
struct Reply {
  std::string state;  // canonical key of the defender's derivative
  std::size_t taus = 0;
  WitnessPtr next;
};

/// Winning attacker strategy: a move, then a refutation of every answer.
struct Witness {
  int attacker = 0;  // 0: the left process moves, 1: the right one
  pi::Action action;
  std::string target;  // canonical key of the attacker's derivative
  std::vector<Reply> replies;
};

struct Verdict {
  enum class Kind : std::uint8_t { Distinguished, Indistinguishable, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Relation relation = Relation::Weak;
  Budget budget;
  WitnessPtr witness;  // Distinguished only
  std::string reason;  // Inconclusive only
  std::size_t states_left = 0;
  std::size_t states_right = 0;
  std::size_t positions = 0;
  /// Some weak answer was cut by the tau budget; a Distinguished verdict
  /// then only holds relative to that budget.
  bool tau_limited = false;
  /// States were contracted with the UpTo wires.
  bool up_to_wires = false;

  bool distinguished() const { return kind == Kind::Distinguished; }
};

std::string to_string(Verdict::Kind k);

/// Bounded bisimulation games on canonical states. For Expansion the
/// verdict is about P <= Q (Q does at least as many tau steps).
Verdict strong_bisim_bounded(const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b,
                             const UpTo& up = {});
Verdict weak_bisim_bounded(const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b,
                           const UpTo& up = {});
Verdict expansion_bounded(const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b,
                          const UpTo& up = {});
Verdict play(Relation r, const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b,
             const UpTo& up = {});

class WitnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReplayReport {
  std::vector<std::string> lines;
  std::size_t moves = 0;  // attacker moves replayed
};

/// Replays `w` on (P, Q) with the plain transition functions. Throws
/// WitnessError when a move is unavailable or a defender answer is left
/// unrefuted.
ReplayReport explain_witness(const Witness& w, Relation r, const Budget& b, const ProcPtr& p, const ProcPtr& q,
                             const ConstEnv& env, const UpTo& up = {});

nlohmann::json budget_to_json(const Budget& b);
nlohmann::json witness_to_json(const Witness& w);
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace pilab::equiv
