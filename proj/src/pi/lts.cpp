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

#include "pilab/pi/lts.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace pilab::pi {

std::string to_string(const Action& a) {
  if (a.kind == Action::Kind::Tau) return "tau";
  std::string out = to_string(a.subject);
  out += a.kind == Action::Kind::Out ? "!(" : "(";
  for (std::size_t i = 0; i < a.bound.size(); ++i) {
    if (i) out += ',';
    out += to_string(a.bound[i]);
  }
  return out + ")";
}

Name placeholder(Sort s, std::size_t base, std::size_t i) {
  return {std::string("$") + (s == Sort::Loc ? "p" : "x") + std::to_string(base + i), s};
}

namespace {

constexpr std::size_t kMaxUnfoldings = 4096;

// Top level of a state with the constants that matter for the next step
// unfolded in place. Group 0 is the state itself; every other group is the
// body of one unfolded constant application.
struct Group {
  int parent = -1;
  std::size_t slot = 0;
  std::vector<Name> res;
  std::vector<ProcPtr> comps;
  std::vector<int> child;  // per component: unfolded group or -1
};

struct LeafRef {
  int group;
  std::size_t slot;
};

class Stepper {
 public:
  Stepper(const ConstEnv& env, std::size_t base, StepFilter filter, const NormalizeOptions& opts)
      : env_(env), base_(base), filter_(filter), opts_(opts), supply_("%") {}

  std::vector<Transition> run(const ProcPtr& canonical) {
    Group top;
    auto tl = top_level(canonical);
    top.res = std::move(tl.restricted);
    top.comps = std::move(tl.components);
    top.child.assign(top.comps.size(), -1);
    groups_.push_back(std::move(top));
    expand();
    collect();
    return finish();
  }

 private:
  const ConstEnv& env_;
  std::size_t base_;
  StepFilter filter_;
  NormalizeOptions opts_;
  NameSupply supply_;
  std::vector<Group> groups_;
  std::vector<Transition> out_;

  const ProcPtr& comp(const LeafRef& l) const { return groups_[l.group].comps[l.slot]; }

  std::vector<LeafRef> leaves() const {
    std::vector<LeafRef> out;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      for (std::size_t i = 0; i < groups_[g].comps.size(); ++i) {
        if (groups_[g].child[i] < 0) out.push_back({static_cast<int>(g), i});
      }
    }
    return out;
  }

  std::vector<std::pair<Name, Polarity>> pairs_of(const Proc& p, bool& tau) const {
    std::vector<std::pair<Name, Polarity>> out;
    tau = false;
    switch (p.kind) {
      case Proc::Kind::In:
      case Proc::Kind::Repl:
        out.push_back({p.subject, Polarity::In});
        break;
      case Proc::Kind::Out:
        out.push_back({p.subject, Polarity::Out});
        break;
      case Proc::Kind::Const: {
        const auto& info = env_.info(p.constant);
        tau = info.tau;
        for (const auto& [i, pol] : info.initial) out.push_back({p.names[i], pol});
        for (const auto& x : out) {
          for (const auto& y : out) {
            if (x.first == y.first && x.second != y.second) tau = true;
          }
        }
        break;
      }
      default:
        break;
    }
    return out;
  }

  void split(const ProcPtr& p, Group& g) {
    switch (p->kind) {
      case Proc::Kind::Nil:
        return;
      case Proc::Kind::Par:
        for (const auto& q : p->parts) split(q, g);
        return;
      case Proc::Kind::Res: {
        Name f = supply_.fresh(p->subject.sort);
        g.res.push_back(f);
        split(rename(p->body(), {{p->subject, f}}, supply_), g);
        return;
      }
      default:
        g.comps.push_back(p);
        return;
    }
  }

  void unfold(const LeafRef& l) {
    const Proc& c = *comp(l);
    const Definition& def = env_.at(c.constant);
    std::map<Name, Name> sub;
    for (std::size_t i = 0; i < def.params.size(); ++i) {
      if (def.params[i] != c.names[i]) sub[def.params[i]] = c.names[i];
    }
    Group g;
    g.parent = l.group;
    g.slot = l.slot;
    split(rename(def.body, sub, supply_), g);
    g.child.assign(g.comps.size(), -1);
    groups_[l.group].child[l.slot] = static_cast<int>(groups_.size());
    groups_.push_back(std::move(g));
  }

  // Unfolds constant applications whose first actions could be observed or
  // could synchronise with another component, until none is left.
  void expand() {
    std::size_t unfoldings = 0;
    for (;;) {
      std::set<Name> blocked;
      for (const auto& g : groups_) blocked.insert(g.res.begin(), g.res.end());
      auto ls = leaves();
      std::vector<std::vector<std::pair<Name, Polarity>>> pairs(ls.size());
      std::vector<bool> tau(ls.size());
      std::map<std::pair<Name, Polarity>, int> count;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        bool t = false;
        pairs[i] = pairs_of(*comp(ls[i]), t);
        tau[i] = t;
        std::set<std::pair<Name, Polarity>> distinct(pairs[i].begin(), pairs[i].end());
        for (const auto& pr : distinct) ++count[pr];
      }
      bool progress = false;
      for (std::size_t i = 0; i < ls.size(); ++i) {
        if (comp(ls[i])->kind != Proc::Kind::Const) continue;
        bool relevant = tau[i];
        for (const auto& [n, pol] : pairs[i]) {
          if (relevant) break;
          if (!blocked.count(n)) relevant = true;
          auto it = count.find({n, opposite(pol)});
          if (it != count.end() && it->second > 0) relevant = true;
        }
        if (!relevant) continue;
        if (++unfoldings > kMaxUnfoldings) {
          throw PiError("constant unfolding does not terminate (unguarded recursion?)");
        }
        unfold(ls[i]);
        progress = true;
      }
      if (!progress) return;
    }
  }

  // Assembles the derivative: groups on the path to a participating leaf
  // stay unfolded, every other constant is folded back.
  ProcPtr assemble(const std::map<std::pair<int, std::size_t>, std::vector<ProcPtr>>& replaced,
                   const std::vector<Name>& extra_res) const {
    std::set<int> open{0};
    for (const auto& [ref, procs] : replaced) {
      for (int g = ref.first; g > 0; g = groups_[g].parent) open.insert(g);
    }
    std::vector<Name> res = extra_res;
    std::vector<ProcPtr> comps;
    std::function<void(int)> walk = [&](int g) {
      const Group& grp = groups_[g];
      res.insert(res.end(), grp.res.begin(), grp.res.end());
      for (std::size_t i = 0; i < grp.comps.size(); ++i) {
        int c = grp.child[i];
        if (c >= 0 && open.count(c)) {
          walk(c);
          continue;
        }
        auto it = replaced.find({g, i});
        if (it != replaced.end()) {
          comps.insert(comps.end(), it->second.begin(), it->second.end());
        } else {
          comps.push_back(grp.comps[i]);
        }
      }
    };
    walk(0);
    return pilab::pi::res(res, par(std::move(comps)));
  }

  std::map<Name, Name> bind(const std::vector<Name>& params, const std::vector<Name>& to) const {
    std::map<Name, Name> sub;
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i] != to[i]) sub[params[i]] = to[i];
    }
    return sub;
  }

  std::vector<ProcPtr> continuation(const Proc& prefix, const std::vector<Name>& objects) {
    std::vector<ProcPtr> out{rename(prefix.body(), bind(prefix.names, objects), supply_)};
    return out;
  }

  void emit(Action a, ProcPtr target) {
    out_.push_back({std::move(a), canonicalize(target, env_, opts_)});
  }

  void collect() {
    std::set<Name> blocked;
    for (const auto& g : groups_) blocked.insert(g.res.begin(), g.res.end());
    auto ls = leaves();

    // [pre], [rep], through [par], [res] and [con].
    for (const auto& l : ls) {
      if (filter_ == StepFilter::TauOnly) break;
      const ProcPtr& c = comp(l);
      if (!c->is_prefix() || blocked.count(c->subject)) continue;
      Action a;
      a.kind = c->kind == Proc::Kind::Out ? Action::Kind::Out : Action::Kind::In;
      a.subject = c->subject;
      for (std::size_t i = 0; i < c->names.size(); ++i) a.bound.push_back(placeholder(c->names[i].sort, base_, i));
      auto cont = continuation(*c, a.bound);
      if (c->kind == Proc::Kind::Repl) cont.push_back(c);
      emit(std::move(a), assemble({{{l.group, l.slot}, cont}}, {}));
    }

    // [com]: the objects of the output become restricted in the derivative.
    for (const auto& lo : ls) {
      if (filter_ == StepFilter::VisibleOnly) break;
      const ProcPtr& o = comp(lo);
      if (o->kind != Proc::Kind::Out) continue;
      for (const auto& li : ls) {
        const ProcPtr& i = comp(li);
        if (i->kind != Proc::Kind::In && i->kind != Proc::Kind::Repl) continue;
        if (i->subject != o->subject || i->names.size() != o->names.size()) continue;
        std::vector<Name> objects;
        for (const auto& n : o->names) objects.push_back(supply_.fresh(n.sort));
        auto out_cont = continuation(*o, objects);
        auto in_cont = continuation(*i, objects);
        if (i->kind == Proc::Kind::Repl) in_cont.push_back(i);
        emit(Action::tau(), assemble({{{lo.group, lo.slot}, out_cont}, {{li.group, li.slot}, in_cont}}, objects));
      }
    }
  }

  std::vector<Transition> finish() {
    std::sort(out_.begin(), out_.end(), [](const Transition& a, const Transition& b) {
      if (a.action != b.action) return a.action < b.action;
      return a.target.key < b.target.key;
    });
    out_.erase(std::unique(out_.begin(), out_.end(),
                           [](const Transition& a, const Transition& b) {
                             return a.action == b.action && a.target.key == b.target.key;
                           }),
               out_.end());
    return std::move(out_);
  }
};

}  // namespace

std::vector<Transition> transitions(const ProcPtr& p, const ConstEnv& env, std::size_t base,
                                    const NormalizeOptions& opts) {
  Canonical c = canonicalize(p, env, opts);
  return Stepper(env, base, StepFilter::All, opts).run(c.proc);
}

std::vector<Transition> canonical_transitions(const Canonical& state, const ConstEnv& env, std::size_t base,
                                              StepFilter filter, const NormalizeOptions& opts) {
  return Stepper(env, base, filter, opts).run(state.proc);
}

std::vector<Canonical> weak_transitions(const ProcPtr& p, const ConstEnv& env, const ActionPattern& pattern,
                                        std::size_t tau_budget, std::size_t base, const NormalizeOptions& opts) {
  // Breadth-first tau closure recording the fewest tau steps to each state.
  auto closure = [&](const Canonical& from, std::size_t budget) {
    std::map<std::string, std::pair<Canonical, std::size_t>> seen;
    std::deque<std::string> queue;
    seen.emplace(from.key, std::make_pair(from, std::size_t{0}));
    queue.push_back(from.key);
    while (!queue.empty()) {
      auto key = queue.front();
      queue.pop_front();
      auto [state, dist] = seen.at(key);
      if (dist == budget) continue;
      for (auto& t : canonical_transitions(state, env, base, StepFilter::TauOnly, opts)) {
        if (seen.count(t.target.key)) continue;
        seen.emplace(t.target.key, std::make_pair(t.target, dist + 1));
        queue.push_back(t.target.key);
      }
    }
    return seen;
  };

  Canonical start = canonicalize(p, env, opts);
  std::map<std::string, Canonical> result;
  auto before = closure(start, tau_budget);
  if (pattern.kind == Action::Kind::Tau) {
    for (auto& [key, entry] : before) result.emplace(key, entry.first);
  } else {
    for (auto& [key, entry] : before) {
      for (auto& t : canonical_transitions(entry.first, env, base, StepFilter::VisibleOnly, opts)) {
        if (!pattern.matches(t.action)) continue;
        for (auto& [k2, e2] : closure(t.target, tau_budget - entry.second)) result.emplace(k2, e2.first);
      }
    }
  }
  std::vector<Canonical> out;
  for (auto& [key, c] : result) out.push_back(std::move(c));
  return out;
}

}  // namespace pilab::pi
