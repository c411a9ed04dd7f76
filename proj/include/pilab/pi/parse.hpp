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

#include <string_view>
#include <vector>

#include "pilab/pi/process.hpp"

namespace pilab::pi {

/// Grammar:
///   P ::= U ("|" U)*
///   U ::= "0" | "(" P ")" | "nu" names "." U | a "(" names ")" "." U
///       | a "!(" names ")" "." U | "!" a "(" names ")" "." U | K "<" names ">"
/// A name is an identifier with an optional ":Loc" or ":Var" annotation;
/// unannotated names take their conventional sort.
ProcPtr parse_process(std::string_view text);

/// Semicolon-separated equations "K(a,b) = P".
std::vector<Definition> parse_definitions(std::string_view text);

}  // namespace pilab::pi
