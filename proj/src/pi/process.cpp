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

#include "pilab/pi/process.hpp"

#include <algorithm>
#include <cctype>

namespace pilab::pi {

Sort conventional_sort(std::string_view id) {
  for (char c : id) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return (c >= 'u' && c <= 'z') ? Sort::Var : Sort::Loc;
    }
  }
  return Sort::Loc;
}

std::string to_string(const Name& n) {
  if (conventional_sort(n.id) == n.sort) return n.id;
  return n.id + (n.sort == Sort::Loc ? ":Loc" : ":Var");
}

namespace {

ProcPtr make(Proc p) { return std::make_shared<const Proc>(std::move(p)); }

ProcPtr prefix(Proc::Kind k, Name subject, std::vector<Name> params, ProcPtr body) {
  Proc p;
  p.kind = k;
  p.subject = std::move(subject);
  p.names = std::move(params);
  p.parts.push_back(std::move(body));
  return make(std::move(p));
}

}  // namespace

ProcPtr nil() {
  static const ProcPtr zero = make(Proc{});
  return zero;
}

ProcPtr input(Name subject, std::vector<Name> params, ProcPtr body) {
  return prefix(Proc::Kind::In, std::move(subject), std::move(params), std::move(body));
}

ProcPtr output(Name subject, std::vector<Name> params, ProcPtr body) {
  return prefix(Proc::Kind::Out, std::move(subject), std::move(params), std::move(body));
}

ProcPtr repl(Name subject, std::vector<Name> params, ProcPtr body) {
  return prefix(Proc::Kind::Repl, std::move(subject), std::move(params), std::move(body));
}

ProcPtr res(Name bound, ProcPtr body) {
  Proc p;
  p.kind = Proc::Kind::Res;
  p.subject = std::move(bound);
  p.parts.push_back(std::move(body));
  return make(std::move(p));
}

ProcPtr res(const std::vector<Name>& bound, ProcPtr body) {
  for (auto it = bound.rbegin(); it != bound.rend(); ++it) body = res(*it, std::move(body));
  return body;
}

ProcPtr par(std::vector<ProcPtr> parts) {
  std::vector<ProcPtr> kept;
  for (auto& q : parts) {
    if (q->kind == Proc::Kind::Nil) continue;
    if (q->kind == Proc::Kind::Par) {
      kept.insert(kept.end(), q->parts.begin(), q->parts.end());
    } else {
      kept.push_back(std::move(q));
    }
  }
  if (kept.empty()) return nil();
  if (kept.size() == 1) return kept.front();
  Proc p;
  p.kind = Proc::Kind::Par;
  p.parts = std::move(kept);
  return make(std::move(p));
}

ProcPtr par(ProcPtr a, ProcPtr b) { return par(std::vector<ProcPtr>{std::move(a), std::move(b)}); }

ProcPtr call(std::string constant, std::vector<Name> args) {
  Proc p;
  p.kind = Proc::Kind::Const;
  p.constant = std::move(constant);
  p.names = std::move(args);
  return make(std::move(p));
}

// ---------------------------------------------------------------------------
// Free names

namespace {

void collect_free(const Proc& p, std::multiset<Name>& bound, std::set<Name>& out,
                  const ConstEnv* env) {
  auto use = [&](const Name& n) {
    if (!bound.count(n)) out.insert(n);
  };
  switch (p.kind) {
    case Proc::Kind::Nil:
      return;
    case Proc::Kind::In:
    case Proc::Kind::Out:
    case Proc::Kind::Repl: {
      use(p.subject);
      std::vector<std::multiset<Name>::iterator> added;
      for (const auto& n : p.names) added.push_back(bound.insert(n));
      collect_free(*p.body(), bound, out, env);
      for (auto it : added) bound.erase(it);
      return;
    }
    case Proc::Kind::Res: {
      auto it = bound.insert(p.subject);
      collect_free(*p.body(), bound, out, env);
      bound.erase(it);
      return;
    }
    case Proc::Kind::Par:
      for (const auto& q : p.parts) collect_free(*q, bound, out, env);
      return;
    case Proc::Kind::Const:
      if (env) env->at(p.constant);
      for (const auto& n : p.names) use(n);
      return;
  }
}

}  // namespace

std::set<Name> free_names(const Proc& p) {
  std::multiset<Name> bound;
  std::set<Name> out;
  collect_free(p, bound, out, nullptr);
  return out;
}

std::set<Name> free_names(const Proc& p, const ConstEnv& env) {
  std::multiset<Name> bound;
  std::set<Name> out;
  collect_free(p, bound, out, &env);
  return out;
}

bool occurs_free(const Proc& p, const Name& n) {
  switch (p.kind) {
    case Proc::Kind::Nil:
      return false;
    case Proc::Kind::In:
    case Proc::Kind::Out:
    case Proc::Kind::Repl:
      if (p.subject == n) return true;
      if (std::find(p.names.begin(), p.names.end(), n) != p.names.end()) return false;
      return occurs_free(*p.body(), n);
    case Proc::Kind::Res:
      return p.subject != n && occurs_free(*p.body(), n);
    case Proc::Kind::Par:
      return std::any_of(p.parts.begin(), p.parts.end(),
                         [&](const ProcPtr& q) { return occurs_free(*q, n); });
    case Proc::Kind::Const:
      return std::find(p.names.begin(), p.names.end(), n) != p.names.end();
  }
  return false;
}

Name NameSupply::fresh(Sort s) {
  return {prefix_ + (s == Sort::Loc ? "p" : "x") + std::to_string(next_++), s};
}

// ---------------------------------------------------------------------------
// Renaming

namespace {

struct Renamer {
  NameSupply& supply;
  std::set<Name> range;

  Name apply(const Name& n, const std::map<Name, Name>& sub) const {
    auto it = sub.find(n);
    return it == sub.end() ? n : it->second;
  }

  // Introduces binders: drops shadowed entries and renames binders that
  // would capture a name of the range.
  std::vector<Name> bind(const std::vector<Name>& binders, std::map<Name, Name>& sub) {
    std::vector<Name> out;
    for (const auto& b : binders) {
      sub.erase(b);
      if (range.count(b)) {
        Name f = supply.fresh(b.sort);
        sub[b] = f;
        out.push_back(f);
      } else {
        out.push_back(b);
      }
    }
    return out;
  }

  ProcPtr run(const ProcPtr& p, const std::map<Name, Name>& sub) {
    if (sub.empty()) return p;
    switch (p->kind) {
      case Proc::Kind::Nil:
        return p;
      case Proc::Kind::In:
      case Proc::Kind::Out:
      case Proc::Kind::Repl: {
        Name s = apply(p->subject, sub);
        auto inner = sub;
        auto params = bind(p->names, inner);
        return prefix(p->kind, std::move(s), std::move(params), run(p->body(), inner));
      }
      case Proc::Kind::Res: {
        auto inner = sub;
        auto b = bind({p->subject}, inner);
        return res(b.front(), run(p->body(), inner));
      }
      case Proc::Kind::Par: {
        std::vector<ProcPtr> parts;
        for (const auto& q : p->parts) parts.push_back(run(q, sub));
        return par(std::move(parts));
      }
      case Proc::Kind::Const: {
        std::vector<Name> args;
        for (const auto& n : p->names) args.push_back(apply(n, sub));
        return call(p->constant, std::move(args));
      }
    }
    return p;
  }
};

}  // namespace

ProcPtr rename(const ProcPtr& p, const std::map<Name, Name>& sub, NameSupply& supply) {
  Renamer r{supply, {}};
  for (const auto& [from, to] : sub) r.range.insert(to);
  return r.run(p, sub);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void names_to(const std::vector<Name>& ns, std::string& out) {
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ',';
    out += to_string(ns[i]);
  }
}

void print(const Proc& p, std::string& out);

void print_body(const Proc& body, std::string& out) {
  if (body.kind == Proc::Kind::Par) {
    out += '(';
    print(body, out);
    out += ')';
  } else {
    print(body, out);
  }
}

void print(const Proc& p, std::string& out) {
  switch (p.kind) {
    case Proc::Kind::Nil:
      out += '0';
      return;
    case Proc::Kind::In:
    case Proc::Kind::Repl:
      if (p.kind == Proc::Kind::Repl) out += '!';
      out += to_string(p.subject);
      out += '(';
      names_to(p.names, out);
      out += ").";
      print_body(*p.body(), out);
      return;
    case Proc::Kind::Out:
      out += to_string(p.subject);
      out += "!(";
      names_to(p.names, out);
      out += ").";
      print_body(*p.body(), out);
      return;
    case Proc::Kind::Res:
      out += "nu ";
      out += to_string(p.subject);
      out += '.';
      print_body(*p.body(), out);
      return;
    case Proc::Kind::Par:
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += " | ";
        print(*p.parts[i], out);
      }
      return;
    case Proc::Kind::Const:
      out += p.constant;
      out += '<';
      names_to(p.names, out);
      out += '>';
      return;
  }
}

}  // namespace

std::string to_string(const Proc& p) {
  std::string out;
  print(p, out);
  return out;
}

std::size_t size(const Proc& p) {
  std::size_t n = 1;
  for (const auto& q : p.parts) n += size(*q);
  return n;
}

}  // namespace pilab::pi
