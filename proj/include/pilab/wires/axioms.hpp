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
#include <string>
#include <vector>

#include "json.hpp"
#include "pilab/equiv/equivalence.hpp"
#include "pilab/lambda/term.hpp"
#include "pilab/wires/wires.hpp"

namespace pilab::wires {

struct AxiomBudget {
  equiv::Budget game{4, 16, 20000};
  std::size_t instances = 10;  // per law, for laws 4 to 7
};

struct LawResult {
  int law = 0;
  std::string sort;     // "loc", "var" or "" when the law is not per-sort
  std::string method;   // "syntactic" or "expansion"
  std::string verdict;  // "pass", "fail" or "inconclusive"
  std::size_t checked = 0;
  std::string detail;
};

struct AxiomReport {
  Family family = Family::IO;
  std::vector<LawResult> laws;

  bool passed() const;
};

/// Laws 4 to 7 are only checked on the given terms: their premises are
/// semantic and hold for encoded lambda-terms, not for arbitrary processes.
AxiomReport check_wire_axioms(const WireEnv& w, const AxiomBudget& b, const std::vector<lambda::TermPtr>& instances);

nlohmann::json to_json(const AxiomReport& r);

}  // namespace pilab::wires
