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

#include "pilab/lambda/term.hpp"

namespace pilab::lambda {

/// Depth-bounded Levy-Longo or Boehm tree.
struct BoundedTree {
  enum class Kind { Top, Bot, Node, DepthCut };
  Kind kind = Kind::DepthCut;
  std::vector<std::string> lams;  // Node binders; for Bot, the \x1..xn of an order-n unsolvable
  std::string head;
  std::vector<BoundedTree> children;
  /// Bot produced because fuel ran out, not because unsolvability was certified.
  bool fuel_limited = false;

  static BoundedTree top() { return {Kind::Top, {}, {}, {}, false}; }
  static BoundedTree bot(std::vector<std::string> lams = {}, bool fuel_limited = false) {
    return {Kind::Bot, std::move(lams), {}, {}, fuel_limited};
  }
  static BoundedTree cut() { return {}; }
};

enum class TreeMode { LT, BT };

BoundedTree lt_tree(const TermPtr& m, std::size_t depth, std::size_t fuel);
BoundedTree bt_tree(const TermPtr& m, std::size_t depth, std::size_t fuel);
BoundedTree build_tree(TreeMode mode, const TermPtr& m, std::size_t depth, std::size_t fuel);

struct TreeVerdict {
  enum class Kind { Equal, Different, Inconclusive };
  Kind kind = Kind::Equal;
  std::size_t depth = 0;            // Equal
  std::vector<std::size_t> path;    // Different: child indices from the root
  std::string reason;               // Different / Inconclusive

  bool equal() const { return kind == Kind::Equal; }
  bool different() const { return kind == Kind::Different; }
};

/// Structural comparison modulo alpha; DepthCut matches anything.
TreeVerdict compare_trees(const BoundedTree& a, const BoundedTree& b, std::size_t depth);
TreeVerdict tree_equal(TreeMode mode, const TermPtr& m, const TermPtr& n, std::size_t depth,
                       std::size_t fuel);

/// Bounded BT-infinity bisimulation game. Depth counts head-normal-form
/// unfoldings; one eta-extended step consumes one unit whatever its width.
TreeVerdict btinf_bisim(const TermPtr& m, const TermPtr& n, std::size_t depth, std::size_t fuel);

/// ASCII rendering, one node per line, children indented.
std::string render_tree(const BoundedTree& t);
nlohmann::json tree_to_json(const BoundedTree& t);
BoundedTree tree_from_json(const nlohmann::json& j);
nlohmann::json verdict_to_json(const TreeVerdict& v);

}  // namespace pilab::lambda
