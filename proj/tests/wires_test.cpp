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
#include "pilab/lambda/term.hpp"
#include "pilab/pi/lts.hpp"
#include "pilab/pi/normalize.hpp"
#include "pilab/pi/parse.hpp"
#include "pilab/wires/axioms.hpp"
#include "pilab/wires/wires.hpp"

using namespace pilab;
using namespace pilab::wires;
using pi::Action;

namespace {

const Name p = pi::loc("p"), q = pi::loc("q"), a = pi::loc("a"), b = pi::loc("b");
const Name x = pi::vname("x"), y = pi::vname("y");

std::vector<pi::Transition> steps(Family f, const ProcPtr& proc) {
  return pi::transitions(proc, wire_env(f).consts);
}

bool has(const std::vector<pi::Transition>& ts, Action::Kind k, const Name& subject) {
  return std::any_of(ts.begin(), ts.end(),
                     [&](const pi::Transition& t) { return t.action.kind == k && t.action.subject == subject; });
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("io") == Family::IO);
  CHECK(parse_family("O-I") == Family::OI);
  CHECK(to_string(Family::P) == "P");
  CHECK_THROWS(parse_family("XY"));
}

TEST_CASE("loc wires") {
  auto io = steps(Family::IO, make_loc_wire(wire_env(Family::IO), p, q));
  REQUIRE(io.size() == 1);
  CHECK(io[0].action.kind == Action::Kind::In);
  CHECK(io[0].action.subject == p);

  auto oi = steps(Family::OI, make_loc_wire(wire_env(Family::OI), p, q));
  REQUIRE(oi.size() == 1);
  CHECK(oi[0].action.kind == Action::Kind::Out);
  CHECK(oi[0].action.subject == q);

  auto pp = steps(Family::P, make_loc_wire(wire_env(Family::P), p, q));
  CHECK(has(pp, Action::Kind::In, p));
  CHECK(has(pp, Action::Kind::Out, q));
  for (auto f : kFamilies) {
    for (const auto& t : steps(f, make_loc_wire(wire_env(f), p, q))) CHECK(t.action.visible());
  }
}

TEST_CASE("var wires") {
  for (auto f : kFamilies) {
    const WireEnv& w = wire_env(f);
    auto v = make_var_wire(w, x, y);
    CHECK(pi::free_names(*v, w.consts) == std::set<Name>{x, y});
    CHECK(w.consts.at(w.var_wire).body->kind == pi::Proc::Kind::Repl);
    auto ts = steps(f, v);
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].action.kind == Action::Kind::In);
    CHECK(ts[0].action.subject == x);
  }
}

TEST_CASE("sugared definitions agree with the constants") {
  for (auto f : kFamilies) {
    const WireEnv& w = wire_env(f);
    for (const auto& d : sugared_definitions(f)) {
      auto sugared = desugar(w, *d.body);
      auto v = equiv::strong_bisim_bounded(sugared, pi::call(d.name, d.params), w.consts, {3, 16, 20000});
      CHECK_MESSAGE(v.kind == equiv::Verdict::Kind::Indistinguishable, (wires::to_string(f) + " " + d.name));
    }
  }
}

TEST_CASE("the OI wires are the duals of the IO wires") {
  const WireEnv& oi = wire_env(Family::OI);
  auto sugared = sugared_definitions(Family::OI);
  auto link = desugar(oi, *sugared[0].body);
  const pi::Definition& d = oi.consts.at(oi.loc_wire);
  CHECK(d.params == std::vector<Name>{q, p});
  std::map<Name, Name> swap{{p, q}, {q, p}};
  pi::NameSupply fresh("%t");
  auto dual = pi::rename(d.body, swap, fresh);
  CHECK(pi::canonicalize(link, oi.consts).key == pi::canonicalize(dual, oi.consts).key);
}

TEST_CASE("permeable prefixes") {
  const WireEnv& w = wire_env(Family::IO);
  auto in = permeable(w, Permeable::InLoc, p, {x, q}, pi::parse_process("a!(y,b).0"));
  auto ts = steps(Family::IO, in);
  CHECK(has(ts, Action::Kind::In, p));
  CHECK(has(ts, Action::Kind::Out, a));

  auto out = permeable(w, Permeable::OutVar, x, {p}, pi::nil());
  auto os = steps(Family::IO, out);
  REQUIRE(os.size() == 1);
  CHECK(os[0].action.kind == Action::Kind::Out);
  CHECK(os[0].action.subject == x);

  auto blocked = permeable(w, Permeable::InLoc, p, {y, q}, pi::parse_process("q!(x,b).0"));
  CHECK_FALSE(has(steps(Family::IO, blocked), Action::Kind::Out, q));
}

TEST_CASE("wire laws hold for every family") {
  AxiomBudget b;
  b.instances = 3;
  std::vector<lambda::TermPtr> inst{lambda::parse_term("\\x.x"), lambda::parse_term("x y"),
                                    lambda::parse_term("\\y.x y")};
  for (auto f : kFamilies) {
    auto r = check_wire_axioms(wire_env(f), b, inst);
    CHECK_MESSAGE(r.passed(), to_json(r).dump());
    CHECK(r.laws.size() == 11);
  }
}

TEST_CASE("P wires are transitive at depth 4") {
  const WireEnv& w = wire_env(Family::P);
  auto direct = make_loc_wire(w, a, pi::loc("c"));
  auto chained = pi::res(b, pi::par(make_loc_wire(w, a, b), make_loc_wire(w, b, pi::loc("c"))));
  auto v = equiv::expansion_bounded(direct, chained, w.consts, {4, 16, 20000});
  CHECK(v.kind == equiv::Verdict::Kind::Indistinguishable);
}
