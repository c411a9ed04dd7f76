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

#include "pilab/lambda/trees.hpp"

#include <map>
#include <set>

#include "pilab/lambda/reduction.hpp"

namespace pilab::lambda {

namespace {

BoundedTree build(TreeMode mode, const TermPtr& m, std::size_t depth, std::size_t fuel) {
  if (depth == 0) return BoundedTree::cut();
  HnfProbe hnf = probe_hnf(m, fuel);
  if (hnf.is_hnf()) {
    BoundedTree node;
    node.kind = BoundedTree::Kind::Node;
    node.lams = hnf.lams;
    node.head = hnf.head;
    for (const auto& a : hnf.args) node.children.push_back(build(mode, a, depth - 1, fuel));
    return node;
  }
  if (mode == TreeMode::BT) return BoundedTree::bot({}, !hnf.loop_detected);
  OrderProbe order = probe_order(m, fuel);
  if (order.outcome == OrderProbe::Outcome::AtLeast) return BoundedTree::top();
  return BoundedTree::bot(order.lams, order.fuel_limited);
}

std::string describe(const BoundedTree& t) {
  switch (t.kind) {
    case BoundedTree::Kind::Top:
      return "⊤";
    case BoundedTree::Kind::DepthCut:
      return "...";
    case BoundedTree::Kind::Bot: {
      std::string s;
      for (const auto& x : t.lams) s += "λ" + x + ".";
      return s + "⊥";
    }
    case BoundedTree::Kind::Node: {
      std::string s;
      for (const auto& x : t.lams) s += "λ" + x + ".";
      return s + t.head;
    }
  }
  return {};
}

using Env = std::map<std::string, std::size_t>;

std::string resolve(const std::string& x, const Env& env) {
  auto it = env.find(x);
  return it == env.end() ? "free:" + x : "bound:" + std::to_string(it->second);
}

TreeVerdict different(std::vector<std::size_t> path, std::string reason) {
  TreeVerdict v;
  v.kind = TreeVerdict::Kind::Different;
  v.path = std::move(path);
  v.reason = std::move(reason);
  return v;
}

TreeVerdict inconclusive(std::string reason) {
  TreeVerdict v;
  v.kind = TreeVerdict::Kind::Inconclusive;
  v.reason = std::move(reason);
  return v;
}

TreeVerdict compare_rec(const BoundedTree& a, const BoundedTree& b, Env env_a, Env env_b,
                        std::size_t& level, std::vector<std::size_t>& path) {
  using K = BoundedTree::Kind;
  if (a.kind == K::DepthCut || b.kind == K::DepthCut) return {};
  bool uncertain = (a.kind == K::Bot && a.fuel_limited) || (b.kind == K::Bot && b.fuel_limited);
  auto mismatch = [&](const std::string& why) {
    if (uncertain) return inconclusive("fuel exhausted before " + why);
    return different(path, describe(a) + " vs " + describe(b));
  };
  if (a.kind != b.kind) return mismatch("the trees could be compared");
  if (a.kind == K::Top) return {};
  if (a.lams.size() != b.lams.size()) return mismatch("binder counts could be compared");
  if (a.kind == K::Bot) return {};
  for (std::size_t i = 0; i < a.lams.size(); ++i) {
    env_a[a.lams[i]] = level;
    env_b[b.lams[i]] = level;
    ++level;
  }
  if (resolve(a.head, env_a) != resolve(b.head, env_b)) {
    return different(path, "head variables differ: " + describe(a) + " vs " + describe(b));
  }
  if (a.children.size() != b.children.size()) {
    return different(path, "argument counts differ: " + std::to_string(a.children.size()) + " vs " +
                               std::to_string(b.children.size()));
  }
  TreeVerdict result;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    path.push_back(i);
    TreeVerdict v = compare_rec(a.children[i], b.children[i], env_a, env_b, level, path);
    path.pop_back();
    if (v.different()) return v;
    if (v.kind == TreeVerdict::Kind::Inconclusive && result.equal()) result = v;
  }
  return result;
}

// Renames the leading binders of an hnf to the given names.
struct Hnf {
  std::string head;
  std::vector<TermPtr> args;
};

Hnf rename_hnf(const HnfProbe& p, const std::vector<std::string>& names) {
  Hnf out{p.head, p.args};
  for (std::size_t i = 0; i < p.lams.size(); ++i) {
    if (p.lams[i] == names[i]) continue;
    auto replacement = var(names[i]);
    if (out.head == p.lams[i]) out.head = names[i];
    for (auto& a : out.args) a = substitute(a, p.lams[i], replacement);
  }
  return out;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  out.insert(t.name);
  if (t.left) collect_names(*t.left, out);
  if (t.right) collect_names(*t.right, out);
}

TreeVerdict btinf_rec(const TermPtr& m, const TermPtr& n, std::size_t depth, std::size_t fuel,
                      std::vector<std::size_t>& path) {
  if (depth == 0) return {};
  HnfProbe pm = probe_hnf(m, fuel);
  HnfProbe pn = probe_hnf(n, fuel);
  if (!pm.is_hnf() && !pn.is_hnf()) {
    if (pm.loop_detected && pn.loop_detected) return {};
    return inconclusive("fuel exhausted without certifying unsolvability");
  }
  if (!pm.is_hnf() || !pn.is_hnf()) {
    const HnfProbe& stuck = pm.is_hnf() ? pn : pm;
    if (stuck.loop_detected) return different(path, "unsolvable vs head normal form");
    return inconclusive("fuel exhausted on one side only");
  }
  // Orient so that `wide` has at least as many binders as `narrow`.
  const bool swapped = pm.lams.size() < pn.lams.size();
  const HnfProbe& wide = swapped ? pn : pm;
  const HnfProbe& narrow = swapped ? pm : pn;
  const std::size_t l = narrow.lams.size();
  const std::size_t extra = wide.lams.size() - l;

  std::set<std::string> avoid;
  for (const auto* p : {&wide, &narrow}) {
    avoid.insert(p->head);
    for (const auto& x : p->lams) avoid.insert(x);
    for (const auto& a : p->args) collect_names(*a, avoid);
  }
  std::vector<std::string> common;
  for (std::size_t i = 0; i < wide.lams.size(); ++i) {
    std::string c = fresh_variable(wide.lams[i], avoid);
    avoid.insert(c);
    common.push_back(c);
  }
  Hnf w = rename_hnf(wide, common);
  Hnf v = rename_hnf(narrow, std::vector<std::string>(common.begin(), common.begin() + l));

  if (w.head != v.head) return different(path, "head variables differ");
  if (w.args.size() != v.args.size() + extra) return different(path, "argument counts differ");
  for (std::size_t j = l; j < common.size(); ++j) {
    if (v.head == common[j]) return different(path, "eta variable occurs free");
    for (const auto& a : v.args) {
      if (occurs_free(*a, common[j])) return different(path, "eta variable occurs free");
    }
  }
  TreeVerdict result;
  for (std::size_t i = 0; i < w.args.size(); ++i) {
    TermPtr other = i < v.args.size() ? v.args[i] : var(common[l + (i - v.args.size())]);
    path.push_back(i);
    TreeVerdict child = swapped ? btinf_rec(other, w.args[i], depth - 1, fuel, path)
                                : btinf_rec(w.args[i], other, depth - 1, fuel, path);
    path.pop_back();
    if (child.different()) return child;
    if (child.kind == TreeVerdict::Kind::Inconclusive && result.equal()) result = child;
  }
  return result;
}

void render_rec(const BoundedTree& t, const std::string& indent, std::string& out) {
  out += indent + describe(t) + (t.kind == BoundedTree::Kind::Bot && t.fuel_limited ? " (fuel)" : "") +
         "\n";
  for (const auto& c : t.children) render_rec(c, indent + "  ", out);
}

const char* kind_name(BoundedTree::Kind k) {
  switch (k) {
    case BoundedTree::Kind::Top:
      return "top";
    case BoundedTree::Kind::Bot:
      return "bot";
    case BoundedTree::Kind::Node:
      return "node";
    case BoundedTree::Kind::DepthCut:
      return "cut";
  }
  return "";
}

}  // namespace

BoundedTree lt_tree(const TermPtr& m, std::size_t depth, std::size_t fuel) {
  return build(TreeMode::LT, m, depth, fuel);
}

BoundedTree bt_tree(const TermPtr& m, std::size_t depth, std::size_t fuel) {
  return build(TreeMode::BT, m, depth, fuel);
}

BoundedTree build_tree(TreeMode mode, const TermPtr& m, std::size_t depth, std::size_t fuel) {
  return build(mode, m, depth, fuel);
}

TreeVerdict compare_trees(const BoundedTree& a, const BoundedTree& b, std::size_t depth) {
  std::size_t level = 0;
  std::vector<std::size_t> path;
  TreeVerdict v = compare_rec(a, b, {}, {}, level, path);
  if (v.equal()) v.depth = depth;
  return v;
}

TreeVerdict tree_equal(TreeMode mode, const TermPtr& m, const TermPtr& n, std::size_t depth,
                       std::size_t fuel) {
  return compare_trees(build(mode, m, depth, fuel), build(mode, n, depth, fuel), depth);
}

TreeVerdict btinf_bisim(const TermPtr& m, const TermPtr& n, std::size_t depth, std::size_t fuel) {
  std::vector<std::size_t> path;
  TreeVerdict v = btinf_rec(m, n, depth, fuel, path);
  if (v.equal()) v.depth = depth;
  return v;
}

std::string render_tree(const BoundedTree& t) {
  std::string out;
  render_rec(t, "", out);
  return out;
}

nlohmann::json tree_to_json(const BoundedTree& t) {
  nlohmann::json j;
  j["kind"] = kind_name(t.kind);
  if (!t.lams.empty()) j["binders"] = t.lams;
  if (t.kind == BoundedTree::Kind::Node) {
    j["head"] = t.head;
    j["children"] = nlohmann::json::array();
    for (const auto& c : t.children) j["children"].push_back(tree_to_json(c));
  }
  if (t.fuel_limited) j["fuel_limited"] = true;
  return j;
}

BoundedTree tree_from_json(const nlohmann::json& j) {
  BoundedTree t;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "top") {
    t.kind = BoundedTree::Kind::Top;
  } else if (kind == "bot") {
    t.kind = BoundedTree::Kind::Bot;
  } else if (kind == "node") {
    t.kind = BoundedTree::Kind::Node;
  } else if (kind == "cut") {
    t.kind = BoundedTree::Kind::DepthCut;
  } else {
    throw std::invalid_argument("unknown tree node kind: " + kind);
  }
  if (j.contains("binders")) t.lams = j.at("binders").get<std::vector<std::string>>();
  if (j.contains("head")) t.head = j.at("head").get<std::string>();
  if (j.contains("children")) {
    for (const auto& c : j.at("children")) t.children.push_back(tree_from_json(c));
  }
  t.fuel_limited = j.value("fuel_limited", false);
  return t;
}

nlohmann::json verdict_to_json(const TreeVerdict& v) {
  nlohmann::json j;
  switch (v.kind) {
    case TreeVerdict::Kind::Equal:
      j["verdict"] = "equal";
      j["depth"] = v.depth;
      break;
    case TreeVerdict::Kind::Different:
      j["verdict"] = "different";
      j["path"] = v.path;
      j["reason"] = v.reason;
      break;
    case TreeVerdict::Kind::Inconclusive:
      j["verdict"] = "inconclusive";
      j["reason"] = v.reason;
      break;
  }
  return j;
}

}  // namespace pilab::lambda
