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

#include "pilab/pi/normalize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace pilab::pi {

namespace {

struct Level;

struct Atom {
  Proc::Kind kind = Proc::Kind::In;
  Name subject;
  std::vector<Name> names;
  std::string constant;
  std::unique_ptr<Level> body;

  std::string shape;
  std::vector<Name> outer;  // occurrences of names bound outside the atom, in shape order
};

struct Level {
  std::vector<Name> res;
  std::vector<Atom> atoms;
};

bool is_temp(const Name& n) { return !n.id.empty() && n.id[0] == '~'; }

char sort_char(Sort s) { return s == Sort::Loc ? 'p' : 'x'; }

// ---------------------------------------------------------------------------
// Flattening: every binder gets a unique temporary name.

class Flattener {
 public:
  void run(const Proc& p, Level& lvl) { flatten(p, lvl); }

 private:
  std::vector<std::pair<Name, Name>> scope_;
  std::size_t next_ = 0;

  Name fresh(Sort s) { return {std::string("~") + sort_char(s) + std::to_string(next_++), s}; }

  Name lookup(const Name& n) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
      if (it->first == n) return it->second;
    }
    return n;
  }

  void flatten(const Proc& p, Level& lvl) {
    switch (p.kind) {
      case Proc::Kind::Nil:
        return;
      case Proc::Kind::Par:
        for (const auto& q : p.parts) flatten(*q, lvl);
        return;
      case Proc::Kind::Res: {
        Name t = fresh(p.subject.sort);
        lvl.res.push_back(t);
        scope_.emplace_back(p.subject, t);
        flatten(*p.body(), lvl);
        scope_.pop_back();
        return;
      }
      case Proc::Kind::In:
      case Proc::Kind::Out:
      case Proc::Kind::Repl: {
        Atom a;
        a.kind = p.kind;
        a.subject = lookup(p.subject);
        for (const auto& n : p.names) {
          Name t = fresh(n.sort);
          a.names.push_back(t);
          scope_.emplace_back(n, t);
        }
        a.body = std::make_unique<Level>();
        flatten(*p.body(), *a.body);
        scope_.resize(scope_.size() - p.names.size());
        lvl.atoms.push_back(std::move(a));
        return;
      }
      case Proc::Kind::Const: {
        Atom a;
        a.kind = Proc::Kind::Const;
        a.constant = p.constant;
        for (const auto& n : p.names) a.names.push_back(lookup(n));
        lvl.atoms.push_back(std::move(a));
        return;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Garbage collection

class Collector {
 public:
  explicit Collector(const ConstEnv& env) : table_(env.table()) {}

  void run(Level& lvl) {
    for (auto& a : lvl.atoms) {
      if (a.body) run(*a.body);
    }
    while (sweep(lvl)) {
    }
  }

 private:
  const std::map<std::string, ConstInfo>& table_;

  using Usage = std::map<Name, PolaritySet>;

  void usage(const Atom& a, Usage& u, std::set<Name>& seen) const {
    seen.insert(a.subject);
    if (a.kind == Proc::Kind::Const) {
      const auto& info = table_.at(a.constant);
      for (std::size_t i = 0; i < a.names.size(); ++i) {
        u[a.names[i]] |= info.usage[i];
        seen.insert(a.names[i]);
      }
      return;
    }
    u[a.subject] |= static_cast<PolaritySet>(a.kind == Proc::Kind::Out ? Polarity::Out : Polarity::In);
    for (const auto& b : a.body->atoms) usage(b, u, seen);
  }

  void mentions(const Atom& a, std::set<Name>& out) const {
    if (a.kind == Proc::Kind::Const) {
      out.insert(a.names.begin(), a.names.end());
      return;
    }
    out.insert(a.subject);
    for (const auto& b : a.body->atoms) mentions(b, out);
  }

  struct Initial {
    std::vector<std::pair<Name, Polarity>> actions;
    bool tau = false;
  };

  Initial initial(const Atom& a) const {
    Initial out;
    if (a.kind != Proc::Kind::Const) {
      out.actions.push_back({a.subject, a.kind == Proc::Kind::Out ? Polarity::Out : Polarity::In});
      return out;
    }
    const auto& info = table_.at(a.constant);
    out.tau = info.tau;
    for (const auto& [i, pol] : info.initial) out.actions.push_back({a.names[i], pol});
    for (const auto& x : out.actions) {
      for (const auto& y : out.actions) {
        if (x.first == y.first && x.second != y.second) out.tau = true;
      }
    }
    return out;
  }

  bool sweep(Level& lvl) const {
    std::set<Name> restricted(lvl.res.begin(), lvl.res.end());
    Usage u;
    std::set<Name> seen;
    for (const auto& a : lvl.atoms) usage(a, u, seen);

    std::vector<bool> drop(lvl.atoms.size(), false);
    std::vector<Initial> init;
    for (const auto& a : lvl.atoms) init.push_back(initial(a));

    // A component is stuck if each of its first actions waits on a
    // restricted name that is never used with the opposite polarity.
    for (std::size_t i = 0; i < lvl.atoms.size(); ++i) {
      if (init[i].tau) continue;
      bool stuck = std::all_of(init[i].actions.begin(), init[i].actions.end(), [&](const auto& act) {
        if (!restricted.count(act.first)) return false;
        auto it = u.find(act.first);
        PolaritySet bits = it == u.end() ? 0 : it->second;
        return (bits & static_cast<PolaritySet>(opposite(act.second))) == 0;
      });
      if (stuck) drop[i] = true;
    }

    // All components mentioning a restricted name wait on it with the
    // same polarity: none of them can ever fire.
    std::map<Name, std::vector<std::size_t>> users;
    for (std::size_t i = 0; i < lvl.atoms.size(); ++i) {
      std::set<Name> m;
      mentions(lvl.atoms[i], m);
      for (const auto& n : m) {
        if (restricted.count(n)) users[n].push_back(i);
      }
    }
    for (const auto& [a, group] : users) {
      std::optional<Polarity> pol;
      bool ok = true;
      for (std::size_t i : group) {
        if (init[i].tau || init[i].actions.empty()) {
          ok = false;
          break;
        }
        for (const auto& [n, p] : init[i].actions) {
          if (n != a || (pol && *pol != p)) {
            ok = false;
            break;
          }
          pol = p;
        }
        if (!ok) break;
      }
      if (ok) {
        for (auto i : group) drop[i] = true;
      }
    }

    bool changed = false;
    std::vector<Atom> kept;
    for (std::size_t i = 0; i < lvl.atoms.size(); ++i) {
      if (drop[i]) {
        changed = true;
      } else {
        kept.push_back(std::move(lvl.atoms[i]));
      }
    }
    lvl.atoms = std::move(kept);

    std::set<Name> used;
    for (const auto& a : lvl.atoms) mentions(a, used);
    std::vector<Name> res;
    for (const auto& r : lvl.res) {
      if (used.count(r)) {
        res.push_back(r);
      } else {
        changed = true;
      }
    }
    lvl.res = std::move(res);
    return changed;
  }
};

// ---------------------------------------------------------------------------
// Wire contraction: nu b (K<a,b> | K<b,c>) -> K<a,c>.

void mentioned(const Atom& a, std::set<Name>& out) {
  if (a.kind == Proc::Kind::Const) {
    out.insert(a.names.begin(), a.names.end());
    return;
  }
  out.insert(a.subject);
  for (const auto& b : a.body->atoms) mentioned(b, out);
}

void contract(Level& lvl, const std::set<std::string>& transitive) {
  for (auto& a : lvl.atoms) {
    if (a.body) contract(*a.body, transitive);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Name, std::vector<std::size_t>> users;
    for (std::size_t i = 0; i < lvl.atoms.size(); ++i) {
      std::set<Name> m;
      mentioned(lvl.atoms[i], m);
      for (const auto& n : m) users[n].push_back(i);
    }
    std::vector<bool> touched(lvl.atoms.size(), false), gone(lvl.atoms.size(), false);
    std::set<Name> dead;
    for (const Name& b : lvl.res) {
      auto it = users.find(b);
      if (it == users.end() || it->second.size() != 2) continue;
      std::size_t i = it->second[0], j = it->second[1];
      if (touched[i] || touched[j]) continue;
      Atom& u = lvl.atoms[i];
      Atom& v = lvl.atoms[j];
      if (u.kind != Proc::Kind::Const || v.kind != Proc::Kind::Const || u.constant != v.constant ||
          !transitive.count(u.constant) || u.names.size() != 2) {
        continue;
      }
      bool u_in = u.names[1] == b;
      Atom* in = u_in ? &u : &v;
      Atom* out = u_in ? &v : &u;
      if (in->names[1] != b || out->names[0] != b || in->names[0] == b || out->names[1] == b ||
          in->names[0] == out->names[1]) {
        continue;
      }
      in->names[1] = out->names[1];
      touched[i] = touched[j] = true;
      gone[u_in ? j : i] = true;
      dead.insert(b);
      changed = true;
    }
    if (!changed) break;
    std::vector<Atom> kept;
    for (std::size_t i = 0; i < lvl.atoms.size(); ++i) {
      if (!gone[i]) kept.push_back(std::move(lvl.atoms[i]));
    }
    lvl.atoms = std::move(kept);
    std::erase_if(lvl.res, [&](const Name& n) { return dead.count(n) > 0; });
  }
}

void drop_unused_restrictions(Level& lvl) {
  std::set<Name> used;
  std::function<void(const Level&)> walk = [&](const Level& l) {
    for (const auto& a : l.atoms) {
      used.insert(a.subject);
      used.insert(a.names.begin(), a.names.end());
      if (a.body) walk(*a.body);
    }
  };
  walk(lvl);
  std::function<void(Level&)> prune = [&](Level& l) {
    std::erase_if(l.res, [&](const Name& n) { return !used.count(n); });
    for (auto& a : l.atoms) {
      if (a.body) prune(*a.body);
    }
  };
  prune(lvl);
}

// ---------------------------------------------------------------------------
// Ordering

class Shaper {
 public:
  std::map<Name, int> local;
  std::string out;
  std::vector<Name> outer;

  void token(const Name& n) {
    auto it = local.find(n);
    if (it != local.end()) {
      out += '#';
      out += std::to_string(it->second);
    } else if (is_temp(n)) {
      outer.push_back(n);
      out += '*';
      out += sort_char(n.sort);
    } else {
      out += to_string(n);
    }
  }

  void bind(const Name& n) {
    int k = static_cast<int>(local.size());
    local[n] = k;
    out += sort_char(n.sort);
  }

  void atom(const Atom& a) {
    switch (a.kind) {
      case Proc::Kind::Const:
        out += a.constant;
        out += '<';
        for (const auto& n : a.names) {
          token(n);
          out += ',';
        }
        out += '>';
        return;
      case Proc::Kind::In:
        out += 'i';
        break;
      case Proc::Kind::Out:
        out += 'o';
        break;
      default:
        out += 'r';
        break;
    }
    token(a.subject);
    out += '(';
    for (const auto& n : a.names) bind(n);
    out += ')';
    level(*a.body);
  }

  void level(const Level& l) {
    out += '{';
    for (const auto& r : l.res) bind(r);
    out += ';';
    for (const auto& a : l.atoms) {
      atom(a);
      out += '|';
    }
    out += '}';
  }
};

void first_occurrences(const Level& l, std::vector<Name>& order, std::set<Name>& seen) {
  auto note = [&](const Name& n) {
    if (seen.insert(n).second) order.push_back(n);
  };
  for (const auto& a : l.atoms) {
    if (a.kind == Proc::Kind::Const) {
      for (const auto& n : a.names) note(n);
      continue;
    }
    note(a.subject);
    first_occurrences(*a.body, order, seen);
  }
}

void order(Level& lvl) {
  for (auto& a : lvl.atoms) {
    if (a.body) order(*a.body);
  }
  for (auto& a : lvl.atoms) {
    Shaper s;
    s.atom(a);
    a.shape = std::move(s.out);
    a.outer = std::move(s.outer);
  }
  std::set<Name> mine(lvl.res.begin(), lvl.res.end());

  // One round of colour refinement separates restricted names by the
  // shapes and positions of the components that mention them.
  std::map<Name, std::vector<std::pair<std::string_view, std::size_t>>> signature;
  for (const auto& a : lvl.atoms) {
    for (std::size_t k = 0; k < a.outer.size(); ++k) {
      if (mine.count(a.outer[k])) signature[a.outer[k]].push_back({a.shape, k});
    }
  }
  for (auto& [n, sig] : signature) std::sort(sig.begin(), sig.end());
  std::vector<const std::vector<std::pair<std::string_view, std::size_t>>*> distinct;
  for (const auto& [n, sig] : signature) distinct.push_back(&sig);
  std::sort(distinct.begin(), distinct.end(), [](auto* x, auto* y) { return *x < *y; });
  distinct.erase(std::unique(distinct.begin(), distinct.end(), [](auto* x, auto* y) { return *x == *y; }),
                 distinct.end());
  std::map<Name, std::size_t> colour;
  for (const auto& [n, sig] : signature) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), &sig, [](auto* x, auto* y) { return *x < *y; });
    colour[n] = static_cast<std::size_t>(it - distinct.begin());
  }

  std::vector<std::string> refined(lvl.atoms.size());
  for (std::size_t i = 0; i < lvl.atoms.size(); ++i) {
    std::string& r = refined[i];
    r = lvl.atoms[i].shape;
    r += '/';
    for (const auto& n : lvl.atoms[i].outer) {
      auto it = colour.find(n);
      r += it == colour.end() ? std::string("*") : std::to_string(it->second);
      r += ',';
    }
  }
  std::vector<std::size_t> idx(lvl.atoms.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return refined[x] < refined[y]; });
  std::vector<Atom> sorted;
  for (auto i : idx) sorted.push_back(std::move(lvl.atoms[i]));
  lvl.atoms = std::move(sorted);

  std::vector<Name> occ;
  std::set<Name> seen;
  first_occurrences(lvl, occ, seen);
  std::vector<Name> res;
  for (const auto& n : occ) {
    if (mine.count(n)) res.push_back(n);
  }
  lvl.res = std::move(res);
}

// ---------------------------------------------------------------------------
// Final renaming

class Builder {
 public:
  ProcPtr level(const Level& l) {
    std::vector<Name> res;
    for (const auto& r : l.res) res.push_back(bind(r));
    std::vector<ProcPtr> parts;
    for (const auto& a : l.atoms) parts.push_back(atom(a));
    return pilab::pi::res(res, par(std::move(parts)));
  }

 private:
  std::map<Name, Name> names_;
  std::size_t next_ = 0;

  Name bind(const Name& n) {
    Name c{std::string("_") + sort_char(n.sort) + std::to_string(next_++), n.sort};
    names_[n] = c;
    return c;
  }

  Name get(const Name& n) const {
    auto it = names_.find(n);
    return it == names_.end() ? n : it->second;
  }

  ProcPtr atom(const Atom& a) {
    if (a.kind == Proc::Kind::Const) {
      std::vector<Name> args;
      for (const auto& n : a.names) args.push_back(get(n));
      return call(a.constant, std::move(args));
    }
    Name subject = get(a.subject);
    std::vector<Name> params;
    for (const auto& n : a.names) params.push_back(bind(n));
    ProcPtr body = level(*a.body);
    switch (a.kind) {
      case Proc::Kind::In:
        return input(std::move(subject), std::move(params), std::move(body));
      case Proc::Kind::Out:
        return output(std::move(subject), std::move(params), std::move(body));
      default:
        return repl(std::move(subject), std::move(params), std::move(body));
    }
  }
};

}  // namespace

Canonical canonicalize(const ProcPtr& p, const ConstEnv& env, const NormalizeOptions& opts) {
  Level top;
  Flattener().run(*p, top);
  if (!opts.transitive.empty()) contract(top, opts.transitive);
  if (opts.garbage_collect) {
    Collector(env).run(top);
  } else {
    drop_unused_restrictions(top);
  }
  order(top);
  Canonical c;
  c.proc = Builder().level(top);
  c.key = to_string(*c.proc);
  return c;
}

ProcPtr struct_normalize(const ProcPtr& p, const ConstEnv& env, const NormalizeOptions& opts) {
  return canonicalize(p, env, opts).proc;
}

TopLevel top_level(const ProcPtr& p) {
  TopLevel t;
  ProcPtr holder = p;
  while (holder->kind == Proc::Kind::Res) {
    t.restricted.push_back(holder->subject);
    holder = holder->body();
  }
  if (holder->kind == Proc::Kind::Par) {
    t.components = holder->parts;
  } else if (holder->kind != Proc::Kind::Nil) {
    t.components.push_back(holder);
  }
  return t;
}

}  // namespace pilab::pi
