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

#include "pilab/encodings/encodings.hpp"
#include "pilab/equiv/equivalence.hpp"
#include "pilab/lambda/term.hpp"
#include "pilab/pi/lts.hpp"
#include "pilab/pi/normalize.hpp"
#include "pilab/pi/sort_check.hpp"

using namespace pilab;
using namespace pilab::enc;
using pi::Action;

namespace {

lambda::TermPtr t(const char* s) { return lambda::parse_term(s); }

const char* kTerms[] = {"x", "\\x.x", "x y z", "\\x y.y x", "Omega", "\\x.Omega", "Ogre", "(\\x.x) y", "x (\\y.y)",
                        "Einf", "\\f x.f (f x)", "(\\x y.x) (\\z.z) w"};

}  // namespace

TEST_CASE("milner encoding") {
  auto v = encode_milner(t("x"));
  CHECK(to_string(*v.milner) == v.text());
  CHECK(v.milner->kind == MilnerNode::Kind::FreeOut);
  CHECK(v.milner->subject == "x");
  CHECK(v.milner->names == std::vector<std::string>{"p"});
  CHECK(encode_milner(t("\\x.x")).milner->kind == MilnerNode::Kind::In);
  auto a = encode_milner(t("x y"));
  CHECK(a.milner->kind == MilnerNode::Kind::Res);
  CHECK(a.milner->names.size() == 2);
}

TEST_CASE("abstract encoding clauses") {
  for (auto f : wires::kFamilies) {
    auto v = encode_abstract(f, t("x"));
    CHECK(v.sugared->kind == wires::Sugar::Kind::PermOut);
    CHECK(v.sugared->subject == pi::vname("x"));
    auto l = encode_abstract(f, t("\\x.x"));
    CHECK(l.sugared->kind == wires::Sugar::Kind::PermIn);
    CHECK(l.sugared->subject == pi::loc("p"));
  }
}

TEST_CASE("encodings sort check and have the expected free names") {
  for (auto f : wires::kFamilies) {
    for (const char* s : kTerms) {
      for (auto variant : {Variant::Abstract, Variant::Optimised}) {
        auto e = encode(variant, f, t(s));
        CHECK_MESSAGE(pi::sort_check(*e.process, e.env()).empty(), s);
        std::set<pi::Name> allowed{pi::loc("p")};
        for (const auto& x : lambda::free_vars(*t(s))) allowed.insert(pi::vname(x));
        for (const auto& n : pi::free_names(*e.process, e.env())) CHECK_MESSAGE(allowed.count(n) == 1, s);
      }
    }
  }
}

TEST_CASE("encodings are deterministic") {
  for (auto f : wires::kFamilies) {
    CHECK(encode_optimised(f, t("Y")).text() == encode_optimised(f, t("Y")).text());
    CHECK(to_json(encode_abstract(f, t("S"))).dump() == to_json(encode_abstract(f, t("S"))).dump());
  }
}

TEST_CASE("optimised omega") {
  const auto& oi = wires::wire_env(wires::Family::OI).consts;
  for (const auto& tr : pi::transitions(encode_optimised(wires::Family::OI, t("Omega")).process, oi)) {
    CHECK_FALSE(tr.action.visible());
  }
  const auto& io = wires::wire_env(wires::Family::IO).consts;
  auto ts = pi::transitions(encode_optimised(wires::Family::IO, t("Omega")).process, io);
  CHECK(std::any_of(ts.begin(), ts.end(), [](const pi::Transition& tr) {
    return tr.action.kind == Action::Kind::In && tr.action.subject == pi::loc("p");
  }));
  CHECK(std::any_of(ts.begin(), ts.end(), [](const pi::Transition& tr) { return !tr.action.visible(); }));
}

TEST_CASE("argument chains") {
  for (auto f : wires::kFamilies) {
    const auto& w = wires::wire_env(f);
    auto a = encode_optimised(f, t("y"), pi::loc("r"));
    auto b = encode_optimised(f, t("z"), pi::loc("r"));
    auto one = encode_argchain(f, pi::loc("p0"), pi::loc("p"), {a});
    auto fn = pi::free_names(*one, w.consts);
    CHECK(fn.count(pi::loc("p0")) == 1);
    CHECK(fn.count(pi::loc("p")) == 1);
    CHECK(one->kind != pi::Proc::Kind::Par);

    auto q = pi::loc("q");
    auto split = pi::res(q, pi::par(encode_argchain(f, pi::loc("p0"), q, {a}), encode_argchain(f, q, pi::loc("p"), {b})));
    auto joined = encode_argchain(f, pi::loc("p0"), pi::loc("p"), {a, b});
    equiv::UpTo up{{w.loc_wire, w.var_wire}};
    auto v = equiv::expansion_bounded(joined, split, w.consts, {4, 16, 20000}, up);
    CHECK_MESSAGE(v.kind != equiv::Verdict::Kind::Distinguished, wires::to_string(f));
  }
}

TEST_CASE("variant names") {
  CHECK(parse_variant("optimized") == Variant::Optimised);
  CHECK(parse_variant("Abstract") == Variant::Abstract);
  CHECK_THROWS(parse_variant("fast"));
}
