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


#include "pilab/equiv/equivalence.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>

#include "pilab/pi/normalize.hpp"
#include "pilab/pi/serialize.hpp"

namespace pilab::equiv {

using pi::Action;
using pi::Canonical;
using pi::StepFilter;

std::string to_string(Relation r) {
  switch (r) {
    case Relation::Strong:
      return "strong";
    case Relation::Weak:
      return "weak";
    case Relation::Expansion:
      return "expansion";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  std::string low(text);
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
  if (low == "strong") return Relation::Strong;
  if (low == "weak") return Relation::Weak;
  if (low == "expand" || low == "expansion") return Relation::Expansion;
  throw std::invalid_argument("unknown relation '" + std::string(text) + "' (expected strong, weak or expand)");
}

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Distinguished:
      return "distinguished";
    case Verdict::Kind::Indistinguishable:
      return "indistinguishable";
    case Verdict::Kind::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

struct Edge {
  Action action;
  int target;
};

struct Reached {
  int state;
  std::size_t taus;
};

// Canonical states of one side of the game, with cached transitions.
class Store {
 public:
  Store(const ConstEnv& env, std::size_t cap, std::size_t tau, pi::NormalizeOptions opts)
      : env_(env), cap_(cap), tau_(tau), opts_(std::move(opts)) {}

  const pi::NormalizeOptions& options() const { return opts_; }

  std::optional<int> intern(Canonical c) {
    auto it = ids_.find(c.key);
    if (it != ids_.end()) return it->second;
    if (states_.size() >= cap_) return std::nullopt;
    int id = static_cast<int>(states_.size());
    ids_.emplace(c.key, id);
    states_.push_back(std::move(c));
    return id;
  }

  const Canonical& state(int id) const { return states_[id]; }
  std::size_t size() const { return states_.size(); }
  bool tau_limited() const { return tau_limited_; }

  const std::vector<Edge>* visible(int id, std::size_t base) {
    auto key = std::make_pair(id, base);
    auto it = visible_.find(key);
    if (it != visible_.end()) return &it->second;
    auto edges = convert(pi::canonical_transitions(states_[id], env_, base, StepFilter::VisibleOnly, opts_));
    if (!edges) return nullptr;
    return &visible_.emplace(key, std::move(*edges)).first->second;
  }

  const std::vector<Edge>* taus(int id) {
    auto it = taus_.find(id);
    if (it != taus_.end()) return &it->second;
    auto edges = convert(pi::canonical_transitions(states_[id], env_, 0, StepFilter::TauOnly, opts_));
    if (!edges) return nullptr;
    return &taus_.emplace(id, std::move(*edges)).first->second;
  }

  // States reachable by at most `limit` tau steps, in order of distance;
  // the list may run one level further. Grown on demand.
  const std::vector<Reached>* closure(int id, std::size_t limit) {
    limit = std::min(limit, tau_);
    Partial& c = closures_.try_emplace(id).first->second;
    if (c.out.empty()) {
      c.out.push_back({id, 0});
      c.seen.emplace(id, 0);
    }
    while (!c.complete && c.level < limit) {
      std::size_t added = 0;
      for (std::size_t i = c.next; i < c.out.size() && c.out[i].taus == c.level; ++i, ++c.next) {
        const auto* ts = taus(c.out[i].state);
        if (!ts) return nullptr;
        for (const auto& e : *ts) {
          if (c.seen.emplace(e.target, c.level + 1).second) {
            c.out.push_back({e.target, c.level + 1});
            ++added;
          }
        }
      }
      ++c.level;
      if (added == 0) c.complete = true;
    }
    if (!c.complete && !c.checked && c.level == tau_) {
      c.checked = true;
      for (std::size_t i = c.next; i < c.out.size(); ++i) {
        const auto* ts = taus(c.out[i].state);
        if (!ts) return nullptr;
        for (const auto& e : *ts) {
          if (!c.seen.count(e.target)) tau_limited_ = true;
        }
      }
    }
    return &c.out;
  }

 private:
  std::optional<std::vector<Edge>> convert(std::vector<pi::Transition> ts) {
    std::vector<Edge> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      auto id = intern(std::move(t.target));
      if (!id) return std::nullopt;
      out.push_back({std::move(t.action), *id});
    }
    return out;
  }

  const ConstEnv& env_;
  std::size_t cap_;
  std::size_t tau_;
  pi::NormalizeOptions opts_;
  std::unordered_map<std::string, int> ids_;
  std::vector<Canonical> states_;
  std::map<std::pair<int, std::size_t>, std::vector<Edge>> visible_;
  std::unordered_map<int, std::vector<Edge>> taus_;
  struct Partial {
    std::vector<Reached> out;
    std::unordered_map<int, std::size_t> seen;
    std::size_t level = 0;  // every state up to this distance is in `out`
    std::size_t next = 0;   // first state of `out` not yet expanded
    bool complete = false;
    bool checked = false;
  };
  std::unordered_map<int, Partial> closures_;
  bool tau_limited_ = false;
};

enum class Outcome : std::uint8_t { Win, Lose, Unknown };

struct Result {
  Outcome outcome;
  WitnessPtr witness;
};

struct PosKey {
  int l, r;
  std::size_t m;
  bool operator==(const PosKey&) const = default;
};

struct PosHash {
  std::size_t operator()(const PosKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.l) * 1000003u;
    h ^= static_cast<std::size_t>(k.r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= k.m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct Memo {
  std::size_t lose = 0;        // deepest budget known to be lost by the attacker
  std::size_t win = SIZE_MAX;  // shallowest budget known to be won
  WitnessPtr witness;
};

std::size_t arity(const Action& a) { return a.bound.size(); }

// Normalisation used for one side of a game.
pi::NormalizeOptions side_options(Relation rel, int side, const UpTo& up) {
  pi::NormalizeOptions o;
  (void)side;
  if (rel != Relation::Strong) o.transitive = up.transitive;
  return o;
}

// Bounded attacker/defender game.
class Game {
 public:
  Game(Relation rel, const Budget& b, const ConstEnv& env, const UpTo& up)
      : rel_(rel),
        budget_(b),
        side_{Store(env, b.state_cap, b.tau, side_options(rel, 0, up)),
              Store(env, b.state_cap, b.tau, side_options(rel, 1, up))} {}

  Verdict run(const ProcPtr& p, const ProcPtr& q, const ConstEnv& env) {
    Verdict v;
    v.relation = rel_;
    v.budget = budget_;
    auto l = side_[0].intern(pi::canonicalize(p, env, side_[0].options()));
    auto r = side_[1].intern(pi::canonicalize(q, env, side_[1].options()));
    Result res{Outcome::Unknown, nullptr};
    if (l && r) res = play(*l, *r, budget_.depth, 0);
    switch (res.outcome) {
      case Outcome::Win:
        v.kind = Verdict::Kind::Distinguished;
        v.witness = res.witness;
        break;
      case Outcome::Lose:
        v.kind = Verdict::Kind::Indistinguishable;
        break;
      case Outcome::Unknown:
        v.kind = Verdict::Kind::Inconclusive;
        v.reason = "state cap of " + std::to_string(budget_.state_cap) + " reached";
        break;
    }
    v.states_left = side_[0].size();
    v.states_right = side_[1].size();
    v.positions = memo_.size();
    v.tau_limited = side_[0].tau_limited() || side_[1].tau_limited();
    v.up_to_wires = !side_[0].options().transitive.empty() || !side_[1].options().transitive.empty();
    return v;
  }

 private:
  struct Move {
    int attacker;
    const Edge* edge;
  };

  // Answers of the defender at `def` to `a` using at most `limit` tau
  // steps, or nothing on overflow.
  std::optional<std::vector<Reached>> defend(int defender, int def, const Action& a, std::size_t m,
                                             std::size_t limit) {
    Store& s = side_[defender];
    std::map<int, std::size_t> best;
    auto add = [&](int st, std::size_t t) {
      if (t > limit) return;
      auto [it, fresh] = best.emplace(st, t);
      if (!fresh && t < it->second) it->second = t;
    };
    bool strong = rel_ == Relation::Strong || (rel_ == Relation::Expansion && defender == 0);
    if (strong) {
      if (!a.visible()) {
        const auto* ts = s.taus(def);
        if (!ts) return std::nullopt;
        for (const auto& e : *ts) add(e.target, 1);
        if (rel_ == Relation::Expansion) add(def, 0);
      } else {
        const auto* vs = s.visible(def, m);
        if (!vs) return std::nullopt;
        for (const auto& e : *vs) {
          if (e.action == a) add(e.target, 0);
        }
      }
    } else if (!a.visible()) {
      if (rel_ == Relation::Weak) {
        const auto* c = s.closure(def, limit);
        if (!c) return std::nullopt;
        for (const auto& r : *c) add(r.state, r.taus);
      } else if (limit > 0) {
        const auto* ts = s.taus(def);
        if (!ts) return std::nullopt;
        for (const auto& e : *ts) {
          const auto* c = s.closure(e.target, limit - 1);
          if (!c) return std::nullopt;
          for (const auto& r : *c) add(r.state, r.taus + 1);
        }
      }
    } else {
      const auto* c = s.closure(def, limit);
      if (!c) return std::nullopt;
      std::vector<Reached> before = *c;
      for (const auto& r : before) {
        if (r.taus > limit) break;
        const auto* vs = s.visible(r.state, m);
        if (!vs) return std::nullopt;
        std::vector<int> hits;
        for (const auto& e : *vs) {
          if (e.action == a) hits.push_back(e.target);
        }
        for (int t : hits) {
          const auto* after = s.closure(t, limit - r.taus);
          if (!after) return std::nullopt;
          for (const auto& r2 : *after) add(r2.state, r.taus + r2.taus);
        }
      }
    }
    std::vector<Reached> out;
    for (const auto& [st, t] : best) out.push_back({st, t});
    return out;
  }

  Result play(int l, int r, std::size_t depth, std::size_t m) {
    if (depth == 0) return {Outcome::Lose, nullptr};
    if (side_[0].state(l).key == side_[1].state(r).key) return {Outcome::Lose, nullptr};
    PosKey key{l, r, m};
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (it->second.lose >= depth) return {Outcome::Lose, nullptr};
      if (it->second.win <= depth) return {Outcome::Win, it->second.witness};
    }
    const int pos[2] = {l, r};
    std::vector<Move> moves;
    bool unknown = false;
    // Moves the defender cannot answer at all win at once. Answers are
    // looked for with growing tau allowance, so the closure is only
    // explored as far as the first answer.
    for (int att = 0; att < 2; ++att) {
      const auto* ts = side_[att].taus(pos[att]);
      const auto* vs = side_[att].visible(pos[att], m);
      if (!ts || !vs) return {Outcome::Unknown, nullptr};
      for (const auto* list : {ts, vs}) {
        for (const auto& e : *list) {
          std::optional<std::vector<Reached>> ans;
          for (std::size_t k = 0; k <= budget_.tau; ++k) {
            ans = defend(1 - att, pos[1 - att], e.action, m, k);
            if (!ans) return {Outcome::Unknown, nullptr};
            if (!ans->empty()) break;
          }
          if (ans->empty()) {
            auto w = std::make_shared<Witness>();
            w->attacker = att;
            w->action = e.action;
            w->target = side_[att].state(e.target).key;
            return remember(key, depth, w);
          }
          moves.push_back({att, &e});
        }
      }
    }
    for (const auto& mv : moves) {
      auto w = std::make_shared<Witness>();
      w->attacker = mv.attacker;
      w->action = mv.edge->action;
      w->target = side_[mv.attacker].state(mv.edge->target).key;
      bool refuted = true;
      const std::size_t next_m = m + arity(mv.edge->action);
      std::set<int> tried;
      for (std::size_t k = 0; k <= budget_.tau && refuted; ++k) {
        auto answers = defend(1 - mv.attacker, pos[1 - mv.attacker], mv.edge->action, m, k);
        if (!answers) return {Outcome::Unknown, nullptr};
        for (const auto& ans : *answers) {
          if (!tried.insert(ans.state).second) continue;
          int nl = mv.attacker == 0 ? mv.edge->target : ans.state;
          int nr = mv.attacker == 0 ? ans.state : mv.edge->target;
          Result sub = play(nl, nr, depth - 1, next_m);
          if (sub.outcome != Outcome::Win) {
            if (sub.outcome == Outcome::Unknown) unknown = true;
            refuted = false;
            break;
          }
          w->replies.push_back({side_[1 - mv.attacker].state(ans.state).key, ans.taus, sub.witness});
        }
      }
      if (refuted) return remember(key, depth, w);
    }
    if (unknown) return {Outcome::Unknown, nullptr};
    Memo& e = memo_[key];
    e.lose = std::max(e.lose, depth);
    return {Outcome::Lose, nullptr};
  }

  Result remember(const PosKey& key, std::size_t depth, WitnessPtr w) {
    Memo& e = memo_[key];
    if (depth < e.win) {
      e.win = depth;
      e.witness = w;
    }
    return {Outcome::Win, std::move(w)};
  }

  Relation rel_;
  Budget budget_;
  Store side_[2];
  std::unordered_map<PosKey, Memo, PosHash> memo_;
};

}  // namespace

Verdict play(Relation r, const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b, const UpTo& up) {
  Verdict v = Game(r, b, env, up).run(p, q, env);
  if (v.distinguished() && v.up_to_wires && r == Relation::Expansion) {
    // Contraction preserves weak bisimilarity but not the tau counts an
    // expansion refutation may rely on: confirm on the plain states.
    Verdict plain = Game(r, b, env, {}).run(p, q, env);
    if (plain.distinguished()) return plain;
    plain.kind = Verdict::Kind::Inconclusive;
    plain.witness = nullptr;
    plain.reason = "refuted only up to wire contraction";
    return plain;
  }
  return v;
}

Verdict strong_bisim_bounded(const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b,
                             const UpTo& up) {
  return play(Relation::Strong, p, q, env, b, up);
}

Verdict weak_bisim_bounded(const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b,
                           const UpTo& up) {
  return play(Relation::Weak, p, q, env, b, up);
}

Verdict expansion_bounded(const ProcPtr& p, const ProcPtr& q, const ConstEnv& env, const Budget& b,
                          const UpTo& up) {
  return play(Relation::Expansion, p, q, env, b, up);
}

namespace {

// Defender answers recomputed from the public transition functions.
std::vector<Canonical> answers_of(Relation rel, int defender, const Canonical& d, const Action& a, std::size_t m,
                                  const Budget& b, const ConstEnv& env, const pi::NormalizeOptions& o) {
  std::vector<Canonical> out;
  bool strong = rel == Relation::Strong || (rel == Relation::Expansion && defender == 0);
  pi::ActionPattern pat{a.kind, a.visible() ? std::optional<pi::Name>(a.subject) : std::nullopt};
  if (strong) {
    for (auto& t : pi::canonical_transitions(d, env, m, StepFilter::All, o)) {
      if (t.action == a) out.push_back(std::move(t.target));
    }
    if (!a.visible() && rel == Relation::Expansion) out.push_back(d);
  } else if (!a.visible() && rel == Relation::Expansion) {
    for (auto& t : pi::canonical_transitions(d, env, m, StepFilter::TauOnly, o)) {
      if (b.tau == 0) break;
      auto more = pi::weak_transitions(t.target.proc, env, pat, b.tau - 1, m, o);
      out.insert(out.end(), more.begin(), more.end());
    }
  } else {
    out = pi::weak_transitions(d.proc, env, pat, b.tau, m, o);
  }
  std::sort(out.begin(), out.end(), [](const Canonical& x, const Canonical& y) { return x.key < y.key; });
  out.erase(std::unique(out.begin(), out.end(), [](const Canonical& x, const Canonical& y) { return x.key == y.key; }),
            out.end());
  return out;
}

struct ReplayContext {
  Relation rel;
  Budget budget;
  const ConstEnv& env;
  pi::NormalizeOptions side[2];
};

void replay(const Witness& w, const ReplayContext& ctx, const Canonical& l, const Canonical& r, std::size_t depth,
            std::size_t m, ReplayReport& rep, const std::string& indent) {
  if (depth == 0) throw WitnessError("witness is deeper than the depth budget");
  const Canonical& att = w.attacker == 0 ? l : r;
  const Canonical& def = w.attacker == 0 ? r : l;
  const char* who = w.attacker == 0 ? "left" : "right";
  const char* other = w.attacker == 0 ? "right" : "left";
  std::optional<Canonical> moved;
  for (auto& t : pi::canonical_transitions(att, ctx.env, m, StepFilter::All, ctx.side[w.attacker])) {
    if (t.action == w.action && t.target.key == w.target) moved = std::move(t.target);
  }
  if (!moved) {
    throw WitnessError(std::string(who) + " side cannot perform " + pi::to_string(w.action) +
                       " to the recorded state");
  }
  ++rep.moves;
  auto answers =
      answers_of(ctx.rel, 1 - w.attacker, def, w.action, m, ctx.budget, ctx.env, ctx.side[1 - w.attacker]);
  rep.lines.push_back(indent + who + " --" + pi::to_string(w.action) + "--> " + moved->key);
  if (answers.empty()) {
    rep.lines.push_back(indent + "  " + other + " has no answer");
    return;
  }
  rep.lines.push_back(indent + "  " + other + " has " + std::to_string(answers.size()) + " answer(s)");
  for (const auto& a : answers) {
    auto it = std::find_if(w.replies.begin(), w.replies.end(), [&](const Reply& rp) { return rp.state == a.key; });
    if (it == w.replies.end() || !it->next) {
      throw WitnessError("answer " + a.key + " of the " + other + " side is not refuted by the witness");
    }
    rep.lines.push_back(indent + "  answer " + a.key);
    const Canonical& nl = w.attacker == 0 ? *moved : a;
    const Canonical& nr = w.attacker == 0 ? a : *moved;
    replay(*it->next, ctx, nl, nr, depth - 1, m + w.action.bound.size(), rep, indent + "    ");
  }
}

}  // namespace

ReplayReport explain_witness(const Witness& w, Relation r, const Budget& b, const ProcPtr& p, const ProcPtr& q,
                             const ConstEnv& env, const UpTo& up) {
  ReplayContext ctx{r, b, env, {side_options(r, 0, up), side_options(r, 1, up)}};
  ReplayReport rep;
  replay(w, ctx, pi::canonicalize(p, env, ctx.side[0]), pi::canonicalize(q, env, ctx.side[1]), b.depth, 0, rep, "");
  return rep;
}

nlohmann::json budget_to_json(const Budget& b) {
  return {{"depth", b.depth}, {"tau", b.tau}, {"state_cap", b.state_cap}};
}

nlohmann::json witness_to_json(const Witness& w) {
  nlohmann::json replies = nlohmann::json::array();
  for (const auto& r : w.replies) {
    nlohmann::json j{{"state", r.state}, {"taus", r.taus}};
    if (r.next) j["next"] = witness_to_json(*r.next);
    replies.push_back(std::move(j));
  }
  return {{"attacker", w.attacker == 0 ? "left" : "right"},
          {"action", pi::action_to_json(w.action)},
          {"target", w.target},
          {"replies", replies}};
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j{{"verdict", to_string(v.kind)},
                   {"relation", to_string(v.relation)},
                   {"budget", budget_to_json(v.budget)},
                   {"states", {{"left", v.states_left}, {"right", v.states_right}}},
                   {"positions", v.positions},
                   {"tau_limited", v.tau_limited},
                   {"up_to_wires", v.up_to_wires}};
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

}  // namespace pilab::equiv
