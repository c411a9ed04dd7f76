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

#include <algorithm>

#include "pilab/lambda/reduction.hpp"
#include "pilab/lambda/term.hpp"

using namespace pilab::lambda;

namespace {

TermPtr t(const char* s) { return parse_term(s); }

bool contains(const std::vector<TermPtr>& xs, const TermPtr& m) {
  return std::any_of(xs.begin(), xs.end(), [&](const TermPtr& x) { return alpha_equal(*x, *m); });
}

}  // namespace

TEST_CASE("parse") {
  auto d = t("\\x.x x");
  REQUIRE(d->is_lam());
  CHECK(d->name == "x");
  CHECK(d->body()->is_app());
  CHECK(d->body()->fun()->name == "x");
  CHECK(d->body()->arg()->name == "x");

  auto mnl = t("m n l");
  REQUIRE(mnl->is_app());
  CHECK(mnl->arg()->name == "l");
  CHECK(mnl->fun()->is_app());
  CHECK(mnl->fun()->fun()->name == "m");

  CHECK_THROWS_AS(t("\\x."), ParseError);
  CHECK_THROWS_AS(t("(x y"), ParseError);
  CHECK(alpha_equal(*t("\\x y.x"), *t("\\a.\\b.a")));
  CHECK_FALSE(alpha_equal(*t("\\x y.x"), *t("\\x y.y")));
}

TEST_CASE("named terms") {
  CHECK(alpha_equal(*t("Omega"), *t("(\\x.x x) (\\x.x x)")));
  CHECK(alpha_equal(*t("Ogre"), *named::ogre()));
  CHECK(alpha_equal(*t(to_string(*t("\\x y.y x")).c_str()), *t("\\x y.y x")));
}

TEST_CASE("free variables") {
  CHECK(free_vars(*t("\\x.x y")) == std::set<std::string>{"y"});
  CHECK(free_vars(*t("(\\x.x) x")) == std::set<std::string>{"x"});
  CHECK(free_vars(*t("Omega")).empty());
}

TEST_CASE("substitution") {
  CHECK(alpha_equal(*substitute(t("\\y.x"), "x", t("z")), *t("\\y.z")));
  auto r = substitute(t("\\y.x y"), "x", t("y"));
  CHECK(alpha_equal(*r, *t("\\w.y w")));
  CHECK(free_vars(*r) == std::set<std::string>{"y"});
  CHECK(alpha_equal(*substitute(t("x"), "x", t("\\z.z")), *t("\\z.z")));
  CHECK(alpha_equal(*substitute(t("\\x.x"), "x", t("z")), *t("\\x.x")));
}

TEST_CASE("full beta") {
  auto r = step_full_beta(t("(\\x.x) y"));
  REQUIRE(r.size() == 1);
  CHECK(alpha_equal(*r[0], *t("y")));

  auto o = step_full_beta(t("Omega"));
  REQUIRE(o.size() == 1);
  CHECK(alpha_equal(*o[0], *t("Omega")));

  auto two = step_full_beta(t("(\\x.x) ((\\y.y) z)"));
  CHECK(two.size() == 1);
  CHECK(contains(two, t("(\\y.y) z")));
  CHECK(contains(two, t("(\\x.x) z")));
  CHECK(step_full_beta(t("(\\x.x x) ((\\y.y) z)")).size() == 2);
}

TEST_CASE("strong call by name") {
  CHECK(step_strong_cbn(t("x ((\\y.y) z)")).empty());
  auto lo = step_strong_cbn(t("\\x.Omega"));
  REQUIRE(lo.size() == 1);
  CHECK(alpha_equal(*lo[0], *t("\\x.Omega")));

  auto r = step_strong_cbn(t("(\\x.x x) ((\\y.y) z)"));
  CHECK(contains(r, t("((\\y.y) z) ((\\y.y) z)")));
  CHECK_FALSE(contains(r, t("(\\x.x x) z")));
}

TEST_CASE("strong call by name steps are full beta steps") {
  for (const char* s : {"(\\x.x) y", "(\\x y.x) ((\\z.z) w)", "\\v.(\\x.x) v", "((\\x.x) (\\y.y)) z",
                        "(\\f x.f (f x)) (\\y.y)", "x ((\\y.y) z) ((\\u.u) w)"}) {
    auto full = step_full_beta(t(s));
    for (const auto& n : step_strong_cbn(t(s))) CHECK_MESSAGE(contains(full, n), s);
  }
}

TEST_CASE("head reduction") {
  auto o = step_head(t("Omega"));
  REQUIRE(o.has_value());
  CHECK(alpha_equal(**o, *t("Omega")));
  auto g = step_head(t("Ogre"));
  REQUIRE(g.has_value());
  CHECK(alpha_equal(**g, *lam("y", named::ogre())));
  CHECK_FALSE(step_head(t("\\x.y ((\\z.z) w)")).has_value());
}

TEST_CASE("hnf probe") {
  auto d = probe_hnf(t("\\x.x x"), 1);
  REQUIRE(d.is_hnf());
  CHECK(d.lams == std::vector<std::string>{"x"});
  CHECK(d.head == "x");
  REQUIRE(d.args.size() == 1);
  CHECK(alpha_equal(*d.term(), *t("\\x.x x")));

  auto o = probe_hnf(t("Omega"), 100);
  CHECK_FALSE(o.is_hnf());
  CHECK(o.steps_used == 100);

  auto y = probe_hnf(t("(\\x.x) y"), 5);
  REQUIRE(y.is_hnf());
  CHECK(y.head == "y");
  CHECK(y.args.empty());
  CHECK(y.lams.empty());
}

TEST_CASE("order probe") {
  auto o = probe_order(t("Omega"), 50);
  CHECK(o.outcome == OrderProbe::Outcome::Order);
  CHECK(o.n == 0);

  auto l = probe_order(t("\\x.Omega"), 50);
  CHECK(l.outcome == OrderProbe::Outcome::Order);
  CHECK(l.n == 1);

  auto g = probe_order(t("Ogre"), 50);
  CHECK(g.outcome == OrderProbe::Outcome::AtLeast);
  CHECK(g.n >= 1);
  CHECK(probe_order(t("Ogre"), 200).n > g.n);

  auto s = probe_order(t("\\x.x"), 50);
  CHECK(s.outcome == OrderProbe::Outcome::SolvedInstead);
}
