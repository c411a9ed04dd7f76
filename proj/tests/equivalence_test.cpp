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

#include "pilab/encodings/encodings.hpp"
#include "pilab/equiv/equivalence.hpp"
#include "pilab/lambda/term.hpp"
#include "pilab/pi/parse.hpp"

using namespace pilab;
using namespace pilab::equiv;
using K = Verdict::Kind;

namespace {

pi::ProcPtr p(const char* s) { return pi::parse_process(s); }

// tau.body by a private handshake on c
pi::ProcPtr tau(const std::string& body) { return p(("nu c.(c!(u,e).0 | c(v,f)." + body + ")").c_str()); }

pi::ProcPtr opt(wires::Family f, const char* m) { return enc::encode_optimised(f, lambda::parse_term(m)).process; }

UpTo contraction(wires::Family f) {
  const auto& w = wires::wire_env(f);
  return {{w.loc_wire, w.var_wire}};
}

const pi::ConstEnv kNone;

}  // namespace

TEST_CASE("strong game") {
  auto a = p("a(x,q).q!(y,r).0");
  CHECK(strong_bisim_bounded(a, a, kNone, {3, 16, 20000}).kind == K::Indistinguishable);
  auto v = strong_bisim_bounded(p("a(x,q).0"), p("a!(x,q).0"), kNone, {1, 16, 20000});
  REQUIRE(v.kind == K::Distinguished);
  REQUIRE(v.witness);
  CHECK(v.witness->replies.empty());
  auto rep = explain_witness(*v.witness, Relation::Strong, {1, 16, 20000}, p("a(x,q).0"), p("a!(x,q).0"), kNone);
  CHECK(rep.moves == 1);
}

TEST_CASE("wire against its unfolding") {
  const auto& w = wires::wire_env(wires::Family::IO);
  auto link = p("Link_IO<a,b>");
  auto unfolded = w.consts.at(w.loc_wire).body;
  auto renamed = p("Link_IO<p,q>");
  CHECK(strong_bisim_bounded(renamed, unfolded, w.consts, {3, 16, 20000}).kind == K::Indistinguishable);
  CHECK(strong_bisim_bounded(link, link, w.consts, {3, 16, 20000}).kind == K::Indistinguishable);
}

TEST_CASE("tau absorption and expansion") {
  auto body = p("a!(x,q).0");
  auto t = tau("a!(x,q).0");
  CHECK(weak_bisim_bounded(t, body, kNone, {2, 2, 20000}).kind == K::Indistinguishable);
  CHECK(strong_bisim_bounded(t, body, kNone, {2, 2, 20000}).kind == K::Distinguished);
  CHECK(expansion_bounded(body, t, kNone, {2, 16, 20000}).kind == K::Indistinguishable);
  auto v = expansion_bounded(t, body, kNone, {2, 16, 20000});
  CHECK(v.kind == K::Distinguished);
  REQUIRE(v.witness);
  CHECK_FALSE(v.witness->action.visible());
}

TEST_CASE("order zero and order one unsolvables") {
  using wires::Family;
  auto v = weak_bisim_bounded(opt(Family::OI, "Omega"), opt(Family::OI, "\\x.Omega"),
                              wires::wire_env(Family::OI).consts, {3, 8, 20000}, contraction(Family::OI));
  REQUIRE(v.kind == K::Distinguished);
  CHECK(v.witness->attacker == 1);
  CHECK(v.witness->action.kind == pi::Action::Kind::In);
  CHECK(v.witness->action.subject == pi::loc("p"));
  auto rep = explain_witness(*v.witness, Relation::Weak, {3, 8, 20000}, opt(Family::OI, "Omega"),
                             opt(Family::OI, "\\x.Omega"), wires::wire_env(Family::OI).consts, contraction(Family::OI));
  CHECK(rep.moves == 1);

  auto io = weak_bisim_bounded(opt(Family::IO, "Omega"), opt(Family::IO, "\\x.Omega"),
                               wires::wire_env(Family::IO).consts, {4, 12, 20000}, contraction(Family::IO));
  CHECK(io.kind == K::Indistinguishable);
}

TEST_CASE("beta redexes expand their contracta") {
  using wires::Family;
  for (auto f : wires::kFamilies) {
    const auto& env = wires::wire_env(f).consts;
    auto red = enc::encode_abstract(f, lambda::parse_term("(\\x.x y) z")).process;
    auto con = enc::encode_abstract(f, lambda::parse_term("z y")).process;
    auto v = expansion_bounded(con, red, env, {3, 12, 20000}, contraction(f));
    CHECK_MESSAGE(v.kind == K::Indistinguishable, wires::to_string(f));
  }
}

TEST_CASE("eta under P wires") {
  using wires::Family;
  auto v = weak_bisim_bounded(opt(Family::P, "x"), opt(Family::P, "\\y.x y"), wires::wire_env(Family::P).consts,
                              {3, 16, 20000}, contraction(Family::P));
  CHECK(v.kind == K::Indistinguishable);
  auto io = weak_bisim_bounded(opt(Family::IO, "x"), opt(Family::IO, "\\y.x y"), wires::wire_env(Family::IO).consts,
                               {3, 16, 20000}, contraction(Family::IO));
  CHECK(io.kind == K::Distinguished);
}

TEST_CASE("fabricated witness") {
  auto a = p("a(x,q).0");
  Witness w;
  w.attacker = 0;
  w.action = {pi::Action::Kind::Out, pi::loc("a"), {pi::vname("$x0"), pi::loc("$p1")}};
  w.target = "0";
  CHECK_THROWS_AS(explain_witness(w, Relation::Strong, {2, 16, 20000}, a, a, kNone), WitnessError);
}

TEST_CASE("state cap") {
  auto v = weak_bisim_bounded(opt(wires::Family::P, "Y"), opt(wires::Family::P, "Einf"),
                              wires::wire_env(wires::Family::P).consts, {6, 16, 50});
  CHECK(v.kind == K::Inconclusive);
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("verdicts are deterministic") {
  using wires::Family;
  auto run = [] {
    return verdict_to_json(weak_bisim_bounded(opt(Family::IO, "x"), opt(Family::IO, "\\y.x y"),
                                              wires::wire_env(Family::IO).consts, {3, 16, 20000},
                                              contraction(Family::IO)))
        .dump();
  };
  CHECK(run() == run());
  CHECK(parse_relation("expand") == Relation::Expansion);
  CHECK(parse_relation("strong") == Relation::Strong);
}
