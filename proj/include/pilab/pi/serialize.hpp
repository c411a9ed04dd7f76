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

#include "json.hpp"
#include "pilab/pi/lts.hpp"
#include "pilab/pi/process.hpp"

namespace pilab::pi {

nlohmann::json name_to_json(const Name& n);
Name name_from_json(const nlohmann::json& j);

/// {"kind": "in"|"out"|"repl"|"res"|"par"|"const"|"nil", ...}
nlohmann::json process_to_json(const Proc& p);
ProcPtr process_from_json(const nlohmann::json& j);

nlohmann::json action_to_json(const Action& a);
Action action_from_json(const nlohmann::json& j);

}  // namespace pilab::pi
