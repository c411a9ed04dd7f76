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


#include "pilab/encodings/encodings.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "pilab/pi/serialize.hpp"

namespace pilab::enc {

using lambda::Term;
using pi::Sort;
namespace s = wires::sugar;

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Milner:
      return "milner";
    case Variant::Abstract:
      return "abstract";
    case Variant::Optimised:
      return "optimised";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  std::string low(text);
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
  if (low == "milner") return Variant::Milner;
  if (low == "abstract") return Variant::Abstract;
  if (low == "optimised" || low == "optimized") return Variant::Optimised;
  throw std::invalid_argument("unknown encoding variant '" + std::string(text) + "'");
}

namespace {

// Names introduced by the encoders contain '^', which no lambda
// identifier can, so they never meet the term's own variables.
class Fresh {
 public:
  Name loc(const char* stem) { return pi::loc(std::string(stem) + "^" + std::to_string(++next_)); }
  Name var() { return pi::vname("x^" + std::to_string(++next_)); }
  std::string raw(const char* stem) { return std::string(stem) + "^" + std::to_string(++next_); }

 private:
  std::size_t next_ = 0;
};

Name lvar(const std::string& x) { return pi::vname(x); }

struct Spine {
  TermPtr head;
  std::vector<TermPtr> args;
};

Spine spine(const TermPtr& m) {
  Spine sp;
  TermPtr t = m;
  while (t->is_app()) {
    sp.args.push_back(t->arg());
    t = t->fun();
  }
  std::reverse(sp.args.begin(), sp.args.end());
  sp.head = t;
  return sp;
}

class Abstract {
 public:
  wires::SugarPtr run(const TermPtr& m, const Name& p) {
    switch (m->kind) {
      case Term::Kind::Var: {
        Name p1 = fresh_.loc("p");
        return s::perm_out(lvar(m->name), {p1}, s::wire(p, p1));
      }
      case Term::Kind::Lam: {
        Name q = fresh_.loc("q");
        return s::perm_in(p, {lvar(m->name), q}, run(m->body(), q));
      }
      case Term::Kind::App: {
        Name q = fresh_.loc("q");
        Name x = fresh_.var();
        Name p1 = fresh_.loc("p");
        Name r = fresh_.loc("r");
        auto fun = run(m->fun(), q);
        auto arg = run(m->arg(), r);
        return s::res(q, s::par({fun, s::perm_out(q, {x, p1}, s::par({s::repl(x, {r}, arg), s::wire(p, p1)}))}));
      }
    }
    return s::nil();
  }

 private:
  Fresh fresh_;
};

class Optimised {
 public:
  wires::SugarPtr run(const TermPtr& m, const Name& p) {
    Spine sp = spine(m);
    if (sp.args.empty()) {
      if (m->is_var()) {
        Name p1 = fresh_.loc("p");
        return s::perm_out(lvar(m->name), {p1}, s::wire(p, p1));
      }
      Name q = fresh_.loc("q");
      return s::perm_in(p, {lvar(m->name), q}, run(m->body(), q));
    }
    Name p0 = fresh_.loc("p");
    if (sp.head->is_var()) {
      return s::perm_out(lvar(sp.head->name), {p0}, chain(p0, p, sp.args));
    }
    Name q = fresh_.loc("q");
    auto fun = s::perm_in(p0, {lvar(sp.head->name), q}, run(sp.head->body(), q));
    return s::res(p0, s::par({fun, chain(p0, p, sp.args)}));
  }

  wires::SugarPtr chain(const Name& p0, const Name& p, const std::vector<TermPtr>& args) {
    std::vector<Name> xs, ps{p0};
    std::vector<wires::SugarPtr> inner;
    for (const auto& a : args) {
      Name x = fresh_.var();
      Name pi = fresh_.loc("p");
      Name r = fresh_.loc("r");
      xs.push_back(x);
      ps.push_back(pi);
      inner.push_back(s::repl(x, {r}, run(a, r)));
    }
    inner.push_back(s::wire(p, ps.back()));
    auto body = s::par(std::move(inner));
    for (std::size_t i = args.size(); i-- > 0;) body = s::perm_out(ps[i], {xs[i], ps[i + 1]}, body);
    return body;
  }

 private:
  Fresh fresh_;
};

MilnerPtr mnode(MilnerNode::Kind k, std::string subject, std::vector<std::string> names,
                std::vector<MilnerPtr> parts = {}) {
  auto n = std::make_shared<MilnerNode>();
  n->kind = k;
  n->subject = std::move(subject);
  n->names = std::move(names);
  n->parts = std::move(parts);
  return n;
}

class Milner {
 public:
  MilnerPtr run(const TermPtr& m, const std::string& p) {
    using K = MilnerNode::Kind;
    switch (m->kind) {
      case Term::Kind::Var:
        return mnode(K::FreeOut, m->name, {p});
      case Term::Kind::Lam: {
        std::string q = fresh_.raw("q");
        return mnode(K::In, p, {m->name, q}, {run(m->body(), q)});
      }
      case Term::Kind::App: {
        std::string q = fresh_.raw("q");
        std::string x = fresh_.raw("x");
        std::string r = fresh_.raw("r");
        auto fun = run(m->fun(), q);
        auto arg = run(m->arg(), r);
        auto body = mnode(K::Par, "", {}, {fun, mnode(K::FreeOut, q, {x, p}), mnode(K::Repl, x, {r}, {arg})});
        return mnode(K::Res, "", {q, x}, {body});
      }
    }
    return nullptr;
  }

 private:
  Fresh fresh_;
};

std::string list(const std::vector<std::string>& ns, char open, char close) {
  std::string out(1, open);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ',';
    out += ns[i];
  }
  return out + close;
}

std::string mbody(const MilnerNode& m) {
  std::string t = to_string(m);
  return m.kind == MilnerNode::Kind::Par ? "(" + t + ")" : t;
}

}  // namespace

std::string to_string(const MilnerNode& m) {
  switch (m.kind) {
    case MilnerNode::Kind::FreeOut:
      return m.subject + "!" + list(m.names, '<', '>');
    case MilnerNode::Kind::In:
      return m.subject + list(m.names, '(', ')') + "." + mbody(*m.parts[0]);
    case MilnerNode::Kind::Repl:
      return "!" + m.subject + list(m.names, '(', ')') + "." + mbody(*m.parts[0]);
    case MilnerNode::Kind::Res: {
      std::string out = "nu";
      for (const auto& n : m.names) out += " " + n;
      return out + "." + mbody(*m.parts[0]);
    }
    case MilnerNode::Kind::Par: {
      std::string out;
      for (std::size_t i = 0; i < m.parts.size(); ++i) {
        if (i) out += " | ";
        out += to_string(*m.parts[i]);
      }
      return out;
    }
  }
  return "?";
}

std::string EncodedAgent::sugared_text() const {
  if (variant == Variant::Milner) return to_string(*milner);
  return wires::to_string(*sugared);
}

std::string EncodedAgent::text() const {
  if (variant == Variant::Milner) return to_string(*milner);
  return pi::to_string(*process);
}

EncodedAgent encode_milner(const TermPtr& m, const Name& p) {
  EncodedAgent a;
  a.variant = Variant::Milner;
  a.source = m;
  a.location = p;
  a.milner = Milner().run(m, p.id);
  return a;
}

EncodedAgent encode_abstract(Family f, const TermPtr& m, const Name& p) {
  EncodedAgent a;
  a.variant = Variant::Abstract;
  a.family = f;
  a.source = m;
  a.location = p;
  a.sugared = Abstract().run(m, p);
  a.process = wires::desugar(wires::wire_env(f), *a.sugared);
  return a;
}

EncodedAgent encode_optimised(Family f, const TermPtr& m, const Name& p) {
  EncodedAgent a;
  a.variant = Variant::Optimised;
  a.family = f;
  a.source = m;
  a.location = p;
  a.sugared = Optimised().run(m, p);
  a.process = wires::desugar(wires::wire_env(f), *a.sugared);
  return a;
}

EncodedAgent encode(Variant v, Family f, const TermPtr& m, const Name& p) {
  switch (v) {
    case Variant::Milner:
      return encode_milner(m, p);
    case Variant::Abstract:
      return encode_abstract(f, m, p);
    case Variant::Optimised:
      return encode_optimised(f, m, p);
  }
  return encode_abstract(f, m, p);
}

ProcPtr encode_argchain(Family f, const Name& p0, const Name& p, const std::vector<EncodedAgent>& args) {
  if (args.empty()) throw std::invalid_argument("argument chain needs at least one argument");
  if (p0.sort != Sort::Loc || p.sort != Sort::Loc) throw pi::PiError("argument chain ends must be locations");
  const wires::WireEnv& w = wires::wire_env(f);
  pi::NameSupply supply("^c");
  std::vector<Name> xs, ps{p0};
  std::vector<ProcPtr> inner;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const EncodedAgent& a = args[i];
    if (a.variant == Variant::Milner || a.family != f) {
      throw std::invalid_argument("argument chain needs pi-I agents of family " + wires::to_string(f));
    }
    std::string k = std::to_string(i + 1);
    Name x = pi::vname("x^c" + k);
    Name r = pi::loc("r^c" + k);
    xs.push_back(x);
    ps.push_back(pi::loc("p^c" + k));
    inner.push_back(pi::repl(x, {r}, pi::rename(a.process, {{a.location, r}}, supply)));
  }
  inner.push_back(wires::make_loc_wire(w, p, ps.back()));
  ProcPtr body = pi::par(std::move(inner));
  for (std::size_t i = args.size(); i-- > 0;) {
    body = wires::permeable(w, wires::Permeable::OutLoc, ps[i], {xs[i], ps[i + 1]}, body);
  }
  return body;
}

nlohmann::json to_json(const EncodedAgent& a) {
  nlohmann::json j;
  j["variant"] = to_string(a.variant);
  if (a.variant != Variant::Milner) j["family"] = wires::to_string(a.family);
  j["term"] = lambda::to_string(*a.source);
  j["location"] = a.location.id;
  j["sugared"] = a.sugared_text();
  if (a.variant == Variant::Milner) {
    j["pi_i"] = false;
  } else {
    j["pi_i"] = true;
    j["process"] = a.text();
    j["ast"] = pi::process_to_json(*a.process);
  }
  return j;
}

}  // namespace pilab::enc
