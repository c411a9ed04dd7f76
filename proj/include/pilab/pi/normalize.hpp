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

#include <set>
#include <string>
#include <vector>

#include "pilab/pi/process.hpp"

namespace pilab::pi {

struct NormalizeOptions {
  /// Drop components that can never fire: those whose first actions all
  /// sit on restricted names that nothing can ever synchronise with.
  bool garbage_collect = true;
  /// Binary constants K with nu b (K<a,b> | K<b,c>) expanding K<a,c>. A
  /// restricted b used by exactly such a pair is contracted away. This is
  /// an up-to-expansion step, not a structural one.
  std::set<std::string> transitive;
};

/// Representative of a structural-congruence class together with its
/// printed form. Restrictions are hoisted to the front of each level,
/// parallel components are flattened and ordered, binders are renamed
/// "_p<k>" / "_x<k>" in traversal order.
struct Canonical {
  ProcPtr proc;
  std::string key;
};

Canonical canonicalize(const ProcPtr& p, const ConstEnv& env, const NormalizeOptions& opts = {});

ProcPtr struct_normalize(const ProcPtr& p, const ConstEnv& env, const NormalizeOptions& opts = {});

/// Splits nu a~ (C1 | ... | Cn) into its restricted names and components.
struct TopLevel {
  std::vector<Name> restricted;
  std::vector<ProcPtr> components;
};
TopLevel top_level(const ProcPtr& p);

}  // namespace pilab::pi
