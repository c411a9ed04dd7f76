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


#include "pilab/wires/axioms.hpp"

#include <algorithm>

#include "pilab/encodings/encodings.hpp"
#include "pilab/pi/analysis.hpp"
#include "pilab/pi/lts.hpp"

namespace pilab::wires {

namespace {

using lambda::TermPtr;
using pi::Polarity;

// '@' cannot occur in lambda identifiers nor in encoder names.
Name L(const char* id) { return pi::loc(std::string("@") + id); }
Name V(const char* id) { return pi::vname(std::string("@") + id); }

ProcPtr wire(const WireEnv& w, const Name& a, const Name& b) {
  return a.sort == pi::Sort::Loc ? make_loc_wire(w, a, b) : make_var_wire(w, a, b);
}

const char* sort_name(pi::Sort s) { return s == pi::Sort::Loc ? "loc" : "var"; }

LawResult law1(const WireEnv& w, pi::Sort s) {
  LawResult r{1, sort_name(s), "syntactic", "pass", 1, {}};
  Name a = s == pi::Sort::Loc ? L("a") : V("a");
  Name b = s == pi::Sort::Loc ? L("b") : V("b");
  ProcPtr k = wire(w, a, b);
  auto fn = pi::free_names(*k, w.consts);
  if (fn != std::set<Name>{a, b}) {
    r.verdict = "fail";
    r.detail = "free names differ from the two ends";
    return r;
  }
  auto usage = pi::name_usage(*k, w.consts.table());
  auto in = static_cast<pi::PolaritySet>(Polarity::In), out = static_cast<pi::PolaritySet>(Polarity::Out);
  if (usage[a] != in || usage[b] != out) {
    r.verdict = "fail";
    r.detail = "first end must be used only in input and second only in output";
  }
  return r;
}

LawResult law2(const WireEnv& w, pi::Sort s) {
  LawResult r{2, sort_name(s), "syntactic", "pass", 1, {}};
  Name a = s == pi::Sort::Loc ? L("a") : V("a");
  Name b = s == pi::Sort::Loc ? L("b") : V("b");
  for (const auto& t : pi::transitions(wire(w, a, b), w.consts)) {
    if (!t.action.visible()) {
      r.verdict = "fail";
      r.detail = "wire has an immediate tau";
    }
  }
  return r;
}

LawResult law8(const WireEnv& w) {
  LawResult r{8, "var", "syntactic", "pass", 1, {}};
  const pi::Definition& d = w.consts.at(w.var_wire);
  if (d.body->kind != pi::Proc::Kind::Repl || d.body->subject != d.params.at(0)) {
    r.verdict = "fail";
    r.detail = "variable wire is not a replicated input at its first end";
  }
  return r;
}

struct Tally {
  std::size_t checked = 0, inconclusive = 0;
  std::string failure;
  bool up_to = false;

  void add(const equiv::Verdict& v, const std::string& what) {
    ++checked;
    up_to = up_to || v.up_to_wires;
    if (v.distinguished() && failure.empty()) failure = what;
    if (v.kind == equiv::Verdict::Kind::Inconclusive) ++inconclusive;
  }

  LawResult result(int law, std::string sort) const {
    LawResult r{law, std::move(sort), "expansion", "pass", checked, {}};
    if (!failure.empty()) {
      r.verdict = "fail";
      r.detail = "distinguished on " + failure;
    } else if (inconclusive) {
      r.verdict = "inconclusive";
      r.detail = std::to_string(inconclusive) + " instance(s) hit the state cap";
    }
    if (up_to && r.verdict == "pass") r.detail = "up to wire transitivity";
    return r;
  }
};

LawResult law3(const WireEnv& w, const AxiomBudget& b, pi::Sort s) {
  Name a = s == pi::Sort::Loc ? L("a") : V("a");
  Name m = s == pi::Sort::Loc ? L("b") : V("b");
  Name c = s == pi::Sort::Loc ? L("c") : V("c");
  ProcPtr direct = wire(w, a, c);
  ProcPtr chained = pi::res(m, pi::par(wire(w, a, m), wire(w, m, c)));
  Tally t;
  t.add(equiv::expansion_bounded(direct, chained, w.consts, b.game), "the wire triple");
  return t.result(3, sort_name(s));
}

enc::EncodedAgent agent(const WireEnv& w, const TermPtr& m, const Name& at) {
  return enc::encode_abstract(w.family, m, at);
}

}  // namespace

bool AxiomReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.verdict == "pass"; });
}

AxiomReport check_wire_axioms(const WireEnv& w, const AxiomBudget& b, const std::vector<TermPtr>& instances) {
  AxiomReport rep;
  rep.family = w.family;
  for (auto s : {pi::Sort::Loc, pi::Sort::Var}) rep.laws.push_back(law1(w, s));
  for (auto s : {pi::Sort::Loc, pi::Sort::Var}) rep.laws.push_back(law2(w, s));
  for (auto s : {pi::Sort::Loc, pi::Sort::Var}) rep.laws.push_back(law3(w, b, s));

  equiv::UpTo up;
  up.transitive = {w.loc_wire, w.var_wire};
  std::size_t n = std::min(b.instances, instances.size());
  Tally t4, t5, t6, t7;
  Name p = L("p"), q = L("q"), r = L("r"), s = L("s"), t = L("t");
  Name x = V("x"), y = V("y");
  for (std::size_t i = 0; i < n; ++i) {
    const TermPtr& m = instances[i];
    std::string what = lambda::to_string(*m);

    // law 4: the body of an abstraction under a permeable input
    TermPtr fun = m->is_lam() ? m : lambda::lam("x", m);
    Name bx = pi::vname(fun->name);
    ProcPtr body = agent(w, fun->body(), r).process;
    ProcPtr lhs4 = pi::res(q, pi::par(make_loc_wire(w, p, q), permeable(w, Permeable::InLoc, q, {bx, r}, body)));
    ProcPtr rhs4 = permeable(w, Permeable::InLoc, p, {bx, r}, body);
    t4.add(equiv::expansion_bounded(rhs4, lhs4, w.consts, b.game, up), what);

    // law 5: an argument server and the return wire under a permeable output
    ProcPtr arg = pi::par(pi::repl(x, {s}, agent(w, m, s).process), make_loc_wire(w, t, r));
    ProcPtr lhs5 = pi::res(p, pi::par(make_loc_wire(w, p, q), permeable(w, Permeable::OutLoc, p, {x, r}, arg)));
    ProcPtr rhs5 = permeable(w, Permeable::OutLoc, q, {x, r}, arg);
    t5.add(equiv::expansion_bounded(rhs5, lhs5, w.consts, b.game, up), what);

    // law 6: a replicated server behind a variable wire
    ProcPtr server = agent(w, m, p).process;
    ProcPtr lhs6 = pi::res(y, pi::par(make_var_wire(w, x, y), pi::repl(y, {p}, server)));
    ProcPtr rhs6 = pi::repl(x, {p}, server);
    t6.add(equiv::expansion_bounded(rhs6, lhs6, w.consts, b.game, up), what);

    // law 7: an argument chain under a permeable output at a variable
    ProcPtr chain = enc::encode_argchain(w.family, p, t, {agent(w, m, r)});
    ProcPtr lhs7 = pi::res(x, pi::par(make_var_wire(w, x, y), permeable(w, Permeable::OutVar, x, {p}, chain)));
    ProcPtr rhs7 = permeable(w, Permeable::OutVar, y, {p}, chain);
    t7.add(equiv::expansion_bounded(rhs7, lhs7, w.consts, b.game, up), what);
  }
  rep.laws.push_back(t4.result(4, "loc"));
  rep.laws.push_back(t5.result(5, "loc"));
  rep.laws.push_back(t6.result(6, "var"));
  rep.laws.push_back(t7.result(7, "var"));
  rep.laws.push_back(law8(w));
  for (auto& l : rep.laws) {
    if (l.law >= 4 && l.law <= 7 && l.checked < b.instances) {
      if (l.verdict == "pass") l.verdict = "inconclusive";
      l.detail += (l.detail.empty() ? "" : "; ") + std::string("only ") + std::to_string(l.checked) +
                  " instance(s) available";
    }
  }
  return rep;
}

nlohmann::json to_json(const AxiomReport& r) {
  nlohmann::json j;
  j["family"] = to_string(r.family);
  j["passed"] = r.passed();
  j["laws_4_to_7"] = "checked on encoded lambda-terms only";
  auto laws = nlohmann::json::array();
  for (const auto& l : r.laws) {
    nlohmann::json e{{"law", l.law}, {"method", l.method}, {"verdict", l.verdict}, {"checked", l.checked}};
    if (!l.sort.empty()) e["sort"] = l.sort;
    if (!l.detail.empty()) e["detail"] = l.detail;
    laws.push_back(std::move(e));
  }
  j["laws"] = std::move(laws);
  return j;
}

}  // namespace pilab::wires
