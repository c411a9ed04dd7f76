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

#include <map>
#include <set>
#include <string>

#include "pilab/pi/process.hpp"

namespace pilab::pi {

/// Over-approximation of the first actions of an agent.
struct InitialActions {
  std::set<std::pair<Name, Polarity>> actions;
  bool tau = false;
};

InitialActions initial_actions(const Proc& p, const std::map<std::string, ConstInfo>& table);

/// Polarities with which each free name may ever be used as a subject.
std::map<Name, PolaritySet> name_usage(const Proc& p, const std::map<std::string, ConstInfo>& table);

}  // namespace pilab::pi
