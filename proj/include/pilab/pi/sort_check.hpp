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

#include <string>
#include <vector>

#include "pilab/pi/process.hpp"

namespace pilab::pi {

struct SortIssue {
  std::string path;  // e.g. "par[1].in(p).body"
  std::string message;
};

/// A location carries (Var, Loc); a variable carries (Loc). Constant
/// applications must match the arity and sorts of their definition.
/// Returns no issues when the agent is well sorted.
std::vector<SortIssue> sort_check(const Proc& p, const ConstEnv& env);

/// Checks every definition body of the environment.
std::vector<SortIssue> sort_check(const ConstEnv& env);

}  // namespace pilab::pi
