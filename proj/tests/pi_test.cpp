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

#include "pilab/equiv/equivalence.hpp"
#include "pilab/pi/lts.hpp"
#include "pilab/pi/normalize.hpp"
#include "pilab/pi/parse.hpp"
#include "pilab/pi/serialize.hpp"
#include "pilab/pi/sort_check.hpp"
#include "pilab/wires/wires.hpp"

using namespace pilab;
using namespace pilab::pi;

namespace {

ProcPtr p(const char* s) { return parse_process(s); }

const ConstEnv& io() { return wires::wire_env(wires::Family::IO).consts; }

std::string key(const char* s) { return canonicalize(p(s), io()).key; }

}  // namespace

TEST_CASE("sorts") {
  ConstEnv env;
  CHECK(sort_check(*p("p(x,q).0"), env).empty());
  CHECK_FALSE(sort_check(*p("p(x).0"), env).empty());
  CHECK_FALSE(sort_check(*p("x(p,q).0"), env).empty());
  CHECK(sort_check(*p("x(p).0"), env).empty());
  CHECK_FALSE(sort_check(*p("Link_IO<p,x>"), io()).empty());
  CHECK_FALSE(sort_check(*p("Link_IO<p>"), io()).empty());
  for (auto f : wires::kFamilies) CHECK(sort_check(wires::wire_env(f).consts).empty());
}

TEST_CASE("free names") {
  CHECK(free_names(*p("nu a.a!(x,b).0")).empty());
  CHECK(free_names(*p("a(x,b).c!(y,d).0")) == std::set<Name>{loc("a"), loc("c")});
  CHECK(free_names(*p("Link_IO<p,q>"), io()) == std::set<Name>{loc("p"), loc("q")});
}

TEST_CASE("structural normal form") {
  CHECK(key("0 | p(x,q).0") == key("p(x,q).0"));
  CHECK(key("nu a.nu b.(a!(x,q).0 | b(x,q).0 | c!(y,d).a(z,e).0)") ==
        key("nu b.nu a.(c!(y,d).a(z,e).0 | b(x,q).0 | a!(x,q).0)"));
  CHECK(key("p(x,q).0") != key("a(y,r).0"));
  CHECK(key("nu x.(y!(p).0 | !x(q).0)") == key("y!(p).0"));
  CHECK(key("p(x,q).q!(y,r).0") == key("p(z,s).s!(w,t).0"));
}

TEST_CASE("garbage rewrite is a strong bisimilarity") {
  auto v = equiv::strong_bisim_bounded(p("nu x.(y!(p).0 | !x(q).0)"), p("y!(p).0"), ConstEnv{}, {4, 16, 20000});
  CHECK(v.kind == equiv::Verdict::Kind::Indistinguishable);
}

TEST_CASE("prefix, communication and replication") {
  ConstEnv env;
  auto in = transitions(p("a(x,q).q!(y,r).0"), env);
  REQUIRE(in.size() == 1);
  CHECK(in[0].action.kind == Action::Kind::In);
  CHECK(in[0].action.subject == loc("a"));
  REQUIRE(in[0].action.bound.size() == 2);
  CHECK(in[0].action.bound[1].sort == Sort::Loc);
  CHECK(free_names(*in[0].target.proc).count(in[0].action.bound[1]) == 1);

  auto com = transitions(p("p!(x,q).x(r).0 | p(y,s).y!(t).0"), env);
  auto tau = std::find_if(com.begin(), com.end(), [](const Transition& t) { return !t.action.visible(); });
  REQUIRE(tau != com.end());
  auto after = transitions(tau->target.proc, env);
  CHECK(std::any_of(after.begin(), after.end(), [](const Transition& t) { return !t.action.visible(); }));

  auto rep = transitions(p("!x(p).p!(y,q).0"), env);
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].action.subject == vname("x"));
  auto again = transitions(rep[0].target.proc, env);
  CHECK(std::count_if(again.begin(), again.end(), [](const Transition& t) { return t.action.subject == vname("x"); }) ==
        1);
  CHECK(again.size() == 2);
}

TEST_CASE("weak transitions") {
  ConstEnv env;
  auto two_taus = p("nu c.(c!(u,e).0 | c(v,f).nu d.(d!(u,e).0 | d(v,f).a!(w,g).0))");
  auto outs = weak_transitions(two_taus, env, {Action::Kind::Out, loc("a")}, 2);
  REQUIRE(outs.size() == 1);
  CHECK(outs[0].key == canonicalize(nil(), env).key);
  CHECK(weak_transitions(two_taus, env, {Action::Kind::Out, loc("a")}, 1).empty());

  auto any = p("a(x,q).0");
  auto hat = weak_transitions(any, env, {Action::Kind::Tau, std::nullopt}, 0);
  REQUIRE(hat.size() == 1);
  CHECK(hat[0].key == canonicalize(any, env).key);
}

TEST_CASE("process json round trip") {
  for (const char* s : {"0", "p(x,q).0", "nu a.(a!(x,q).Link_IO<q,p> | !x(r).r(y,s).0)", "VLink_P<x,y>"}) {
    auto j = process_to_json(*p(s));
    CHECK(to_string(*process_from_json(j)) == to_string(*p(s)));
    CHECK(parse_process(to_string(*p(s)))->kind == p(s)->kind);
  }
  Action a{Action::Kind::Out, loc("p"), {vname("$x0"), loc("$p1")}};
  CHECK(action_from_json(action_to_json(a)) == a);
}
