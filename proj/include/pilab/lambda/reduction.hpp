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
#include <optional>
#include <string>
#include <vector>

#include "pilab/lambda/term.hpp"

namespace pilab::lambda {

/// One-step reducts under beta, mu (argument), nu (function) and xi (body),
/// deduplicated modulo alpha. Order follows a left-to-right traversal.
std::vector<TermPtr> step_full_beta(const TermPtr& m);

/// One-step strong call-by-name reducts: beta, nu and xi only.
std::vector<TermPtr> step_strong_cbn(const TermPtr& m);

/// Contracts the head redex of \x~. (\y.M0) M1 ... Mn. Empty iff `m` is a
/// head normal form.
std::optional<TermPtr> step_head(const TermPtr& m);

/// Splits a term into its leading binders and the remaining body.
struct LambdaSpine {
  std::vector<std::string> lams;
  TermPtr body;
};
LambdaSpine strip_lambdas(const TermPtr& m);

/// Head normal form \x~. y M1 ... Mn, or the evidence that none was reached.
struct HnfProbe {
  enum class Outcome { Hnf, FuelExhausted };
  Outcome outcome = Outcome::FuelExhausted;
  std::vector<std::string> lams;
  std::string head;
  std::vector<TermPtr> args;
  std::size_t steps_used = 0;
  /// Set when head reduction of the body revisited an alpha-equivalent term:
  /// the term is then certainly unsolvable.
  bool loop_detected = false;

  bool is_hnf() const { return outcome == Outcome::Hnf; }
  TermPtr term() const;  // reassembled hnf; requires is_hnf()
};

HnfProbe probe_hnf(const TermPtr& m, std::size_t fuel);

/// Order of unsolvability, as far as `fuel` head steps can tell.
struct OrderProbe {
  enum class Outcome { Order, AtLeast, SolvedInstead };
  Outcome outcome = Outcome::Order;
  std::size_t n = 0;
  std::vector<std::string> lams;  // leading binders of the last reduct
  HnfProbe solved;                // meaningful for SolvedInstead
  /// Order(n) was inferred from running out of fuel, not from a loop.
  bool fuel_limited = false;
  /// A loop that keeps adding binders was seen: the order is omega.
  bool omega_certified = false;
};

OrderProbe probe_order(const TermPtr& m, std::size_t fuel);

}  // namespace pilab::lambda
