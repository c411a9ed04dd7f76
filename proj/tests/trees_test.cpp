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

#include <doctest.h>

#include "pilab/lambda/term.hpp"
#include "pilab/lambda/trees.hpp"

using namespace pilab::lambda;

namespace {

TermPtr t(const char* s) { return parse_term(s); }

}  // namespace

TEST_CASE("LT of delta, lambda-omega and the ogre") {
  auto d = lt_tree(t("Delta"), 3, 10);
  REQUIRE(d.kind == BoundedTree::Kind::Node);
  CHECK(d.lams == std::vector<std::string>{"x"});
  CHECK(d.head == "x");
  REQUIRE(d.children.size() == 1);
  CHECK(d.children[0].kind == BoundedTree::Kind::Node);
  CHECK(d.children[0].head == "x");
  CHECK(d.children[0].children.empty());

  auto l = lt_tree(t("\\x.Omega"), 3, 50);
  CHECK(l.kind == BoundedTree::Kind::Bot);
  CHECK(l.lams.size() == 1);

  CHECK(lt_tree(t("Ogre"), 3, 50).kind == BoundedTree::Kind::Top);
}

TEST_CASE("BT collapses unsolvables") {
  CHECK(bt_tree(t("Omega"), 3, 50).kind == BoundedTree::Kind::Bot);
  CHECK(bt_tree(t("Ogre"), 3, 50).kind == BoundedTree::Kind::Bot);
  auto l = bt_tree(t("\\x.Omega"), 3, 50);
  CHECK(l.kind == BoundedTree::Kind::Bot);
  CHECK(l.lams.empty());
  CHECK(compare_trees(bt_tree(t("Delta"), 3, 10), lt_tree(t("Delta"), 3, 10), 3).equal());
}

TEST_CASE("tree equality") {
  CHECK(tree_equal(TreeMode::BT, t("Omega"), t("\\x.Omega"), 3, 50).equal());
  auto v = tree_equal(TreeMode::LT, t("Omega"), t("\\x.Omega"), 3, 50);
  CHECK(v.different());
  CHECK(v.path.empty());
  CHECK(tree_equal(TreeMode::LT, t("x (\\y.y)"), t("x (\\y z.y)"), 3, 50).path == std::vector<std::size_t>{0});
  for (const char* s : {"S", "\\x.x", "Y", "Einf", "Ogre", "x Omega"}) {
    if (std::string(s) == "S") s = "\\x y z.x z (y z)";
    CHECK(tree_equal(TreeMode::LT, t(s), t(s), 3, 200).equal());
    CHECK(tree_equal(TreeMode::BT, t(s), t(s), 3, 200).equal());
  }
}

TEST_CASE("infinite eta") {
  auto e = btinf_bisim(t("z"), t("Einf z"), 3, 200);
  CHECK(e.equal());
  CHECK(e.depth == 3);
  CHECK(btinf_bisim(t("x"), t("\\y.x y"), 2, 10).equal());
  auto d = btinf_bisim(t("x"), t("y"), 1, 10);
  CHECK(d.different());
  CHECK(d.path.empty());
  CHECK(btinf_bisim(t("\\x y.x"), t("\\x y.y"), 3, 50).different());
  CHECK(tree_equal(TreeMode::BT, t("z"), t("Einf z"), 3, 200).different());
}

TEST_CASE("tree json round trip") {
  for (const char* s : {"Delta", "\\x.Omega", "Ogre", "x (\\y.y) Omega"}) {
    for (TreeMode m : {TreeMode::LT, TreeMode::BT}) {
      auto tr = build_tree(m, t(s), 3, 100);
      auto back = tree_from_json(tree_to_json(tr));
      CHECK(tree_to_json(back) == tree_to_json(tr));
      CHECK(compare_trees(tr, back, 3).equal());
    }
  }
}
