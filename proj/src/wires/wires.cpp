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


#include "pilab/wires/wires.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "pilab/pi/parse.hpp"

namespace pilab::wires {

using pi::Proc;
using pi::Sort;

std::string to_string(Family f) {
  switch (f) {
    case Family::IO:
      return "IO";
    case Family::OI:
      return "OI";
    case Family::P:
      return "P";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  if (up == "IO" || up == "I-O") return Family::IO;
  if (up == "OI" || up == "O-I") return Family::OI;
  if (up == "P") return Family::P;
  throw std::invalid_argument("unknown wire family '" + std::string(text) + "' (expected IO, OI or P)");
}

namespace {

constexpr const char* kIoDefs =
    "Link_IO(p,q) = p(y,p1).nu x q1.(q!(x',q1').(Link_IO<q1,q1'> | VLink_IO<x',x>)"
    " | Link_IO<p1,q1> | VLink_IO<x,y>);"
    "VLink_IO(x,y) = !x(p).nu q.(y!(q').Link_IO<q,q'> | Link_IO<p,q>)";

constexpr const char* kPDefs =
    "Link_P(p,q) = nu y p1 x q1.(p(y',p1').(Link_P<p1',p1> | VLink_P<y,y'>)"
    " | q!(x',q1').(Link_P<q1,q1'> | VLink_P<x',x>) | Link_P<p1,q1> | VLink_P<x,y>);"
    "VLink_P(x,y) = !x(p).nu q.(y!(q').Link_P<q,q'> | Link_P<p,q>)";

ProcPtr dualize(const ProcPtr& p, const std::map<std::string, std::string>& names, bool swap) {
  auto body = [&] { return dualize(p->body(), names, swap); };
  switch (p->kind) {
    case Proc::Kind::Nil:
      return p;
    case Proc::Kind::In:
      return swap ? pi::output(p->subject, p->names, body()) : pi::input(p->subject, p->names, body());
    case Proc::Kind::Out:
      return swap ? pi::input(p->subject, p->names, body()) : pi::output(p->subject, p->names, body());
    case Proc::Kind::Repl:
      return pi::repl(p->subject, p->names, body());
    case Proc::Kind::Res:
      return pi::res(p->subject, body());
    case Proc::Kind::Par: {
      std::vector<ProcPtr> parts;
      for (const auto& q : p->parts) parts.push_back(dualize(q, names, swap));
      return pi::par(std::move(parts));
    }
    case Proc::Kind::Const: {
      auto it = names.find(p->constant);
      std::string c = it == names.end() ? p->constant : it->second;
      auto args = p->names;
      if (swap && args.size() == 2) std::swap(args[0], args[1]);
      return pi::call(c, args);
    }
  }
  return p;
}

WireEnv build(Family f) {
  WireEnv w;
  w.family = f;
  if (f == Family::OI) {
    const WireEnv& io = wire_env(Family::IO);
    w.loc_wire = "Link_OI";
    w.var_wire = "VLink_OI";
    w.consts = pi::ConstEnv(dual_definitions(io, w.loc_wire, w.var_wire));
    return w;
  }
  const std::string tag = to_string(f);
  w.loc_wire = "Link_" + tag;
  w.var_wire = "VLink_" + tag;
  w.consts = pi::ConstEnv(pi::parse_definitions(f == Family::IO ? kIoDefs : kPDefs));
  return w;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw pi::PiError(what);
}

Name primed(const Name& n) { return {n.id + "'", n.sort}; }

}  // namespace

const WireEnv& wire_env(Family f) {
  switch (f) {
    case Family::IO: {
      static const WireEnv io = build(Family::IO);
      return io;
    }
    case Family::OI: {
      static const WireEnv oi = build(Family::OI);
      return oi;
    }
    case Family::P: {
      static const WireEnv p = build(Family::P);
      return p;
    }
  }
  throw std::invalid_argument("unknown wire family");
}

ProcPtr make_loc_wire(const WireEnv& w, const Name& a, const Name& b) {
  require(a.sort == Sort::Loc && b.sort == Sort::Loc, "location wire needs two location names");
  require(a != b, "wire ends must differ: " + pi::to_string(a));
  return pi::call(w.loc_wire, {a, b});
}

ProcPtr make_var_wire(const WireEnv& w, const Name& x, const Name& y) {
  require(x.sort == Sort::Var && y.sort == Sort::Var, "variable wire needs two variable names");
  require(x != y, "wire ends must differ: " + pi::to_string(x));
  return pi::call(w.var_wire, {x, y});
}

ProcPtr permeable(const WireEnv& w, Permeable kind, const Name& subject, const std::vector<Name>& bound,
                  ProcPtr body) {
  const bool on_loc = kind == Permeable::InLoc || kind == Permeable::OutLoc;
  const bool in = kind == Permeable::InLoc || kind == Permeable::InVar;
  if (on_loc) {
    require(subject.sort == Sort::Loc && bound.size() == 2 && bound[0].sort == Sort::Var &&
                bound[1].sort == Sort::Loc,
            "permeable prefix at location " + pi::to_string(subject) + " must bind (Var,Loc)");
    const Name& x = bound[0];
    const Name& q = bound[1];
    Name x1 = primed(x);
    Name q1 = primed(q);
    ProcPtr guarded = in ? pi::input(subject, {x1, q1}, pi::par(make_var_wire(w, x, x1), make_loc_wire(w, q1, q)))
                         : pi::output(subject, {x1, q1}, pi::par(make_var_wire(w, x1, x), make_loc_wire(w, q, q1)));
    return pi::res(bound, pi::par(guarded, std::move(body)));
  }
  require(subject.sort == Sort::Var && bound.size() == 1 && bound[0].sort == Sort::Loc,
          "permeable prefix at variable " + pi::to_string(subject) + " must bind (Loc)");
  const Name& p = bound[0];
  Name p1 = primed(p);
  ProcPtr guarded = in ? pi::input(subject, {p1}, make_loc_wire(w, p1, p))
                       : pi::output(subject, {p1}, make_loc_wire(w, p, p1));
  return pi::res(p, pi::par(guarded, std::move(body)));
}

namespace sugar {

namespace {
SugarPtr node(Sugar::Kind k, Name subject, std::vector<Name> names, std::vector<SugarPtr> parts) {
  auto s = std::make_shared<Sugar>();
  s->kind = k;
  s->subject = std::move(subject);
  s->names = std::move(names);
  s->parts = std::move(parts);
  return s;
}
}  // namespace

SugarPtr nil() {
  static const SugarPtr z = std::make_shared<Sugar>();
  return z;
}
SugarPtr in(Name subject, std::vector<Name> params, SugarPtr body) {
  return node(Sugar::Kind::In, std::move(subject), std::move(params), {std::move(body)});
}
SugarPtr out(Name subject, std::vector<Name> params, SugarPtr body) {
  return node(Sugar::Kind::Out, std::move(subject), std::move(params), {std::move(body)});
}
SugarPtr repl(Name subject, std::vector<Name> params, SugarPtr body) {
  return node(Sugar::Kind::Repl, std::move(subject), std::move(params), {std::move(body)});
}
SugarPtr res(Name bound, SugarPtr body) { return node(Sugar::Kind::Res, std::move(bound), {}, {std::move(body)}); }
SugarPtr par(std::vector<SugarPtr> parts) {
  std::vector<SugarPtr> flat;
  for (auto& p : parts) {
    if (p->kind == Sugar::Kind::Nil) continue;
    if (p->kind == Sugar::Kind::Par) {
      flat.insert(flat.end(), p->parts.begin(), p->parts.end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.empty()) return nil();
  if (flat.size() == 1) return flat.front();
  return node(Sugar::Kind::Par, {}, {}, std::move(flat));
}
SugarPtr wire(Name a, Name b) { return node(Sugar::Kind::Wire, {}, {std::move(a), std::move(b)}, {}); }
SugarPtr perm_in(Name subject, std::vector<Name> bound, SugarPtr body) {
  return node(Sugar::Kind::PermIn, std::move(subject), std::move(bound), {std::move(body)});
}
SugarPtr perm_out(Name subject, std::vector<Name> bound, SugarPtr body) {
  return node(Sugar::Kind::PermOut, std::move(subject), std::move(bound), {std::move(body)});
}

}  // namespace sugar

namespace {

std::string names_text(const std::vector<Name>& ns) {
  std::string out = "(";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ',';
    out += pi::to_string(ns[i]);
  }
  return out + ")";
}

std::string body_text(const Sugar& s) {
  std::string t = to_string(s);
  return s.kind == Sugar::Kind::Par ? "(" + t + ")" : t;
}

}  // namespace

std::string to_string(const Sugar& s) {
  switch (s.kind) {
    case Sugar::Kind::Nil:
      return "0";
    case Sugar::Kind::In:
      return pi::to_string(s.subject) + names_text(s.names) + "." + body_text(*s.body());
    case Sugar::Kind::Out:
      return pi::to_string(s.subject) + "!" + names_text(s.names) + "." + body_text(*s.body());
    case Sugar::Kind::Repl:
      return "!" + pi::to_string(s.subject) + names_text(s.names) + "." + body_text(*s.body());
    case Sugar::Kind::Res:
      return "nu " + pi::to_string(s.subject) + "." + body_text(*s.body());
    case Sugar::Kind::Par: {
      std::string out;
      for (std::size_t i = 0; i < s.parts.size(); ++i) {
        if (i) out += " | ";
        out += to_string(*s.parts[i]);
      }
      return out;
    }
    case Sugar::Kind::Wire:
      return pi::to_string(s.names[0]) + "->" + pi::to_string(s.names[1]);
    case Sugar::Kind::PermIn:
      return pi::to_string(s.subject) + ":" + names_text(s.names) + "." + body_text(*s.body());
    case Sugar::Kind::PermOut:
      return pi::to_string(s.subject) + "!:" + names_text(s.names) + "." + body_text(*s.body());
  }
  return "?";
}

ProcPtr desugar(const WireEnv& w, const Sugar& s) {
  auto body = [&] { return desugar(w, *s.body()); };
  switch (s.kind) {
    case Sugar::Kind::Nil:
      return pi::nil();
    case Sugar::Kind::In:
      return pi::input(s.subject, s.names, body());
    case Sugar::Kind::Out:
      return pi::output(s.subject, s.names, body());
    case Sugar::Kind::Repl:
      return pi::repl(s.subject, s.names, body());
    case Sugar::Kind::Res:
      return pi::res(s.subject, body());
    case Sugar::Kind::Par: {
      std::vector<ProcPtr> parts;
      for (const auto& p : s.parts) parts.push_back(desugar(w, *p));
      return pi::par(std::move(parts));
    }
    case Sugar::Kind::Wire:
      return s.names[0].sort == Sort::Loc ? make_loc_wire(w, s.names[0], s.names[1])
                                          : make_var_wire(w, s.names[0], s.names[1]);
    case Sugar::Kind::PermIn:
      return permeable(w, s.subject.sort == Sort::Loc ? Permeable::InLoc : Permeable::InVar, s.subject, s.names,
                       body());
    case Sugar::Kind::PermOut:
      return permeable(w, s.subject.sort == Sort::Loc ? Permeable::OutLoc : Permeable::OutVar, s.subject, s.names,
                       body());
  }
  return pi::nil();
}

std::vector<SugaredDefinition> sugared_definitions(Family f) {
  using namespace sugar;
  const WireEnv& w = wire_env(f);
  Name p = pi::loc("p"), q = pi::loc("q"), p1 = pi::loc("p1"), q1 = pi::loc("q1");
  Name x = pi::vname("x"), y = pi::vname("y");
  SugarPtr inner = par({wire(p1, q1), wire(x, y)});
  SugarPtr link;
  switch (f) {
    case Family::IO:
      link = in(p, {y, p1}, perm_out(q, {x, q1}, inner));
      break;
    case Family::OI:
      link = out(q, {x, q1}, perm_in(p, {y, p1}, inner));
      break;
    case Family::P:
      link = perm_in(p, {y, p1}, perm_out(q, {x, q1}, inner));
      break;
  }
  SugarPtr vlink = repl(x, {p}, perm_out(y, {q}, wire(p, q)));
  return {{w.loc_wire, {p, q}, link}, {w.var_wire, {x, y}, vlink}};
}

std::vector<pi::Definition> dual_definitions(const WireEnv& w, const std::string& loc_name,
                                             const std::string& var_name) {
  std::map<std::string, std::string> names{{w.loc_wire, loc_name}, {w.var_wire, var_name}};
  const pi::Definition& link = w.consts.at(w.loc_wire);
  const pi::Definition& vlink = w.consts.at(w.var_wire);
  std::vector<Name> reversed(link.params.rbegin(), link.params.rend());
  return {{loc_name, reversed, dualize(link.body, names, true)},
          {var_name, vlink.params, dualize(vlink.body, names, false)}};
}

}  // namespace pilab::wires
