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


#include "pilab/suite/suite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "pilab/encodings/encodings.hpp"
#include "pilab/lambda/reduction.hpp"
#include "pilab/lambda/trees.hpp"
#include "pilab/pi/lts.hpp"
#include "pilab/pi/serialize.hpp"
#include "pilab/wires/axioms.hpp"
#include "pilab/wires/wires.hpp"

namespace pilab::suite {

namespace {

using equiv::Verdict;
using lambda::TermPtr;
using nlohmann::json;
using wires::Family;

constexpr std::size_t kReachCap = 2000;

const pi::Name kP = pi::loc("p");

void note(const Config& cfg, const std::string& line) {
  if (cfg.log) cfg.log(line);
}

equiv::UpTo up_to(Family f) {
  const auto& w = wires::wire_env(f);
  return {{w.loc_wire, w.var_wire}};
}

const pi::ConstEnv& env(Family f) { return wires::wire_env(f).consts; }

pi::ProcPtr opt(Family f, const TermPtr& m) { return enc::encode_optimised(f, m, kP).process; }
pi::ProcPtr abs(Family f, const TermPtr& m) { return enc::encode_abstract(f, m, kP).process; }

equiv::Budget at_depth(const Config& cfg, std::size_t depth) {
  equiv::Budget b = cfg.budget;
  b.depth = depth;
  return b;
}

json brief(const Verdict& v) {
  json j{{"verdict", equiv::to_string(v.kind)},
         {"depth", v.budget.depth},
         {"states", {v.states_left, v.states_right}}};
  if (v.tau_limited) j["tau_limited"] = true;
  if (v.up_to_wires) j["up_to_wires"] = true;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.witness) {
    j["attacker"] = v.witness->attacker == 0 ? "left" : "right";
    j["move"] = pi::to_string(v.witness->action);
  }
  return j;
}

struct Search {
  std::optional<std::size_t> depth;  // first depth with a Distinguished verdict
  Verdict last;
};

Search separate(equiv::Relation r, const pi::ProcPtr& a, const pi::ProcPtr& b, Family f, const Config& cfg,
                std::size_t from, std::size_t to) {
  Search s;
  for (std::size_t d = from; d <= to; ++d) {
    s.last = equiv::play(r, a, b, env(f), at_depth(cfg, d), up_to(f));
    if (s.last.distinguished()) {
      s.depth = d;
      return s;
    }
    if (s.last.kind == Verdict::Kind::Inconclusive) return s;
  }
  return s;
}

std::string fam(Family f) { return wires::to_string(f); }

// Breadth-first tau closure, capped.
struct Closure {
  std::vector<pi::Canonical> states;
  bool truncated = false;
};

// States are taken up to wire contraction, which keeps the subjects of
// visible actions.
Closure tau_closure(const pi::ProcPtr& p, Family f, std::size_t tau_budget) {
  Closure c;
  std::map<std::string, std::size_t> seen;
  std::deque<std::pair<pi::Canonical, std::size_t>> queue;
  pi::NormalizeOptions opts;
  opts.transitive = up_to(f).transitive;
  pi::Canonical start = pi::canonicalize(p, env(f), opts);
  seen.emplace(start.key, 0);
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [s, d] = queue.front();
    queue.pop_front();
    c.states.push_back(s);
    if (d == tau_budget) {
      c.truncated = true;
      continue;
    }
    for (auto& t : pi::canonical_transitions(s, env(f), 0, pi::StepFilter::TauOnly, opts)) {
      if (seen.count(t.target.key)) continue;
      if (seen.size() >= kReachCap) {
        c.truncated = true;
        break;
      }
      seen.emplace(t.target.key, d + 1);
      queue.emplace_back(t.target, d + 1);
    }
  }
  return c;
}

char tree_letter(const lambda::TreeVerdict& v) {
  if (v.equal()) return 'E';
  if (v.different()) return 'D';
  return '?';
}

}  // namespace

bool Report::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const Criterion& c) { return c.passed; });
}

Criterion beta_validity(const corpus::Corpus& c, const Config& cfg) {
  Criterion out{1, "beta-validity, all families", true, {}, json::array()};
  std::size_t games = 0, dist = 0, inconclusive = 0;
  for (const auto& r : c.redexes) {
    const TermPtr& lam = r.term->fun();
    TermPtr reduct = lambda::substitute(lam->body(), lam->name, r.term->arg());
    for (Family f : wires::kFamilies) {
      for (enc::Variant v : {enc::Variant::Abstract, enc::Variant::Optimised}) {
        auto small = enc::encode(v, f, reduct, kP).process;
        auto big = enc::encode(v, f, r.term, kP).process;
        Verdict res = equiv::expansion_bounded(small, big, env(f), cfg.budget, up_to(f));
        ++games;
        if (res.kind == Verdict::Kind::Indistinguishable) continue;
        json e = brief(res);
        e["redex"] = r.name;
        e["family"] = fam(f);
        e["variant"] = enc::to_string(v);
        out.details.push_back(e);
        if (res.distinguished()) {
          ++dist;
          out.passed = false;
        } else {
          ++inconclusive;
          if (res.reason.find("state cap") == std::string::npos) out.passed = false;
        }
        note(cfg, "beta " + r.name + " " + fam(f) + " " + enc::to_string(v) + ": " + equiv::to_string(res.kind));
      }
    }
  }
  out.summary = std::to_string(games) + " expansion games on " + std::to_string(c.redexes.size()) + " redexes: " +
                std::to_string(dist) + " distinguished, " + std::to_string(inconclusive) + " inconclusive";
  if (c.redexes.size() < 25) {
    out.passed = false;
    out.summary += "; corpus has fewer than 25 redexes";
  }
  return out;
}

Criterion eta_separation(const Config& cfg) {
  Criterion out{2, "eta separation", true, {}, json::object()};
  TermPtr x = lambda::parse_term("x");
  TermPtr ex = lambda::parse_term("\\y.x y");
  Verdict p = equiv::weak_bisim_bounded(opt(Family::P, x), opt(Family::P, ex), env(Family::P),
                                        at_depth(cfg, cfg.strong_depth), up_to(Family::P));
  out.details["P"] = brief(p);
  if (p.distinguished()) out.passed = false;
  out.summary = "P " + equiv::to_string(p.kind) + " at depth " + std::to_string(cfg.strong_depth);
  for (Family f : {Family::IO, Family::OI}) {
    Search s = separate(equiv::Relation::Weak, opt(f, x), opt(f, ex), f, cfg, 1, cfg.max_depth);
    json e = brief(s.last);
    e["minimal_depth"] = s.depth ? json(*s.depth) : json(nullptr);
    out.details[fam(f)] = e;
    if (!s.depth) out.passed = false;
    out.summary += "; " + fam(f) + (s.depth ? " separated at depth " + std::to_string(*s.depth) : " not separated");
    note(cfg, "eta " + fam(f) + ": " + equiv::to_string(s.last.kind));
  }
  return out;
}

Criterion unsolvable_separation(const Config& cfg) {
  Criterion out{3, "unsolvable separations", true, {}, json::object()};
  TermPtr omega = lambda::named::omega();
  TermPtr lomega = lambda::parse_term("\\x.Omega");
  TermPtr ogre = lambda::named::ogre();

  Search s = separate(equiv::Relation::Weak, opt(Family::OI, omega), opt(Family::OI, lomega), Family::OI, cfg, 1,
                      std::min<std::size_t>(3, cfg.max_depth));
  json oi = brief(s.last);
  bool at_p = s.last.witness && s.last.witness->action.kind == pi::Action::Kind::In &&
              s.last.witness->action.subject == kP;
  oi["first_move_input_at_p"] = at_p;
  out.details["OI Omega vs \\x.Omega"] = oi;
  if (!s.depth || !at_p) out.passed = false;
  out.summary = s.depth ? "OI separated at depth " + std::to_string(*s.depth) : "OI not separated";
  note(cfg, "unsolvable OI: " + equiv::to_string(s.last.kind));

  for (const auto& [label, other] : {std::pair{"IO Omega vs \\x.Omega", lomega}, std::pair{"IO Omega vs Ogre", ogre}}) {
    Verdict v = equiv::weak_bisim_bounded(opt(Family::IO, omega), opt(Family::IO, other), env(Family::IO),
                                          at_depth(cfg, cfg.strong_depth), up_to(Family::IO));
    out.details[label] = brief(v);
    if (v.distinguished()) out.passed = false;
    out.summary += std::string("; ") + label + " " + equiv::to_string(v.kind);
    note(cfg, std::string("unsolvable ") + label + ": " + equiv::to_string(v.kind));
  }
  return out;
}

Criterion wire_axioms(const corpus::Corpus& c, const Config& cfg) {
  Criterion out{4, "wire axioms", true, {}, json::array()};
  std::vector<TermPtr> inst;
  for (const auto& e : c.instances) inst.push_back(e.term);
  wires::AxiomBudget ab;
  ab.game = at_depth(cfg, cfg.strong_depth);
  std::vector<std::string> parts;
  for (Family f : wires::kFamilies) {
    auto rep = wires::check_wire_axioms(wires::wire_env(f), ab, inst);
    out.details.push_back(wires::to_json(rep));
    if (!rep.passed()) out.passed = false;
    std::size_t ok = std::count_if(rep.laws.begin(), rep.laws.end(), [](const auto& l) { return l.verdict == "pass"; });
    parts.push_back(fam(f) + " " + std::to_string(ok) + "/" + std::to_string(rep.laws.size()));
    note(cfg, "wires " + fam(f) + ": " + (rep.passed() ? "pass" : "fail"));
  }
  out.summary = "law checks passed: " + parts[0] + ", " + parts[1] + ", " + parts[2];
  return out;
}

Criterion optimisation(const corpus::Corpus& c, const Config& cfg) {
  Criterion out{5, "optimisation and operational correspondence", true, {}, json::object()};
  json problems = json::array();
  std::size_t games = 0, taus = 0, inconclusive = 0, truncated = 0;
  std::set<std::string> silent;  // unsolvable witnesses shown to have no output
  for (const auto& t : c.terms) {
    const TermPtr& m = t.term;
    auto reducts = lambda::step_strong_cbn(m);
    auto probe = lambda::probe_hnf(m, cfg.fuel);
    for (Family f : wires::kFamilies) {
      auto record = [&](const std::string& what, json e) {
        e["term"] = t.name;
        e["family"] = fam(f);
        e["check"] = what;
        problems.push_back(e);
      };
      pi::ProcPtr o = opt(f, m);

      Verdict v = equiv::expansion_bounded(o, abs(f, m), env(f), cfg.budget, up_to(f));
      ++games;
      if (v.distinguished()) {
        out.passed = false;
        record("optimisation", brief(v));
      } else if (v.kind == Verdict::Kind::Inconclusive) {
        ++inconclusive;
        record("optimisation", brief(v));
      }

      for (const auto& tr : pi::transitions(o, env(f))) {
        if (tr.action.visible()) continue;
        ++taus;
        bool matched = false;
        std::optional<Verdict> seen;
        for (const auto& n : reducts) {
          Verdict w = equiv::expansion_bounded(opt(f, n), tr.target.proc, env(f), cfg.budget, up_to(f));
          if (!w.distinguished()) {
            matched = true;
            if (w.kind == Verdict::Kind::Inconclusive) {
              ++inconclusive;
              record("tau-correspondence", brief(w));
            }
            break;
          }
          seen = w;
        }
        if (!matched) {
          out.passed = false;
          json e = seen ? brief(*seen) : json{{"reason", "tau move but no reduct"}};
          e["derivative"] = tr.target.key;
          record("tau-correspondence", e);
        }
      }

      Closure cl = tau_closure(o, f, cfg.budget.tau);
      if (cl.truncated) ++truncated;
      bool output = false;
      for (const auto& s : cl.states) {
        for (const auto& tr : pi::canonical_transitions(s, env(f), 0, pi::StepFilter::VisibleOnly)) {
          if (tr.action.kind == pi::Action::Kind::In && tr.action.subject != kP) {
            out.passed = false;
            record("input-at-p", json{{"action", pi::to_string(tr.action)}, {"state", s.key}});
          }
          if (tr.action.kind == pi::Action::Kind::Out) {
            output = true;
            if (!probe.is_hnf() || probe.head != tr.action.subject.id) {
              out.passed = false;
              record("output-implies-solvable", json{{"action", pi::to_string(tr.action)}});
            }
          }
        }
      }
      if (!output && (t.name == "Omega" || t.name == "lam_Omega" || t.name == "Ogre")) silent.insert(t.name + "/" + fam(f));
    }
    note(cfg, "optimisation " + t.name + " done");
  }
  for (const char* u : {"Omega", "lam_Omega", "Ogre"}) {
    for (Family f : wires::kFamilies) {
      if (!silent.count(std::string(u) + "/" + fam(f))) {
        out.passed = false;
        problems.push_back(json{{"term", u}, {"family", fam(f)}, {"check", "unsolvable-no-output"}});
      }
    }
  }
  out.details["problems"] = problems;
  out.details["no_output"] = json(std::vector<std::string>(silent.begin(), silent.end()));
  out.summary = std::to_string(games) + " optimisation games, " + std::to_string(taus) + " tau moves matched, " +
                std::to_string(inconclusive) + " inconclusive, " + std::to_string(truncated) +
                " tau closures truncated";
  return out;
}

Criterion tree_agreement(const corpus::Corpus& c, const Config& cfg) {
  Criterion out{6, "tree oracle agreement", true, {}, json::array()};
  std::size_t agree = 0, total = 0;
  const std::size_t tree_depth = 3;
  for (const auto& pr : c.pairs) {
    const TermPtr& a = pr.left.term;
    const TermPtr& b = pr.right.term;
    for (Family f : wires::kFamilies) {
      lambda::TreeVerdict tv;
      char expected = '?';
      std::string tree;
      switch (f) {
        case Family::IO:
          tv = lambda::tree_equal(lambda::TreeMode::BT, a, b, tree_depth, cfg.fuel);
          expected = pr.expected.bt;
          tree = "BT";
          break;
        case Family::OI:
          tv = lambda::tree_equal(lambda::TreeMode::LT, a, b, tree_depth, cfg.fuel);
          expected = pr.expected.lt;
          tree = "LT";
          break;
        case Family::P:
          tv = lambda::btinf_bisim(a, b, tree_depth, cfg.fuel);
          expected = pr.expected.btinf;
          tree = "BTinf";
          break;
      }
      ++total;
      json e{{"pair", pr.name}, {"family", fam(f)}, {"tree", tree}, {"tree_verdict", std::string(1, tree_letter(tv))}};
      bool ok = expected == '?' || expected == tree_letter(tv);
      if (tv.different()) {
        Search s = separate(equiv::Relation::Weak, opt(f, a), opt(f, b), f, cfg, 1, cfg.max_depth);
        e["bisim"] = brief(s.last);
        ok = ok && s.depth.has_value();
      } else if (tv.equal()) {
        Verdict v = equiv::weak_bisim_bounded(opt(f, a), opt(f, b), env(f), cfg.budget, up_to(f));
        e["bisim"] = brief(v);
        ok = ok && !v.distinguished();
      } else {
        ok = false;
        e["reason"] = tv.reason;
      }
      e["agree"] = ok;
      if (ok) {
        ++agree;
      } else {
        out.passed = false;
      }
      out.details.push_back(e);
      note(cfg, "trees " + pr.name + " " + fam(f) + ": " + (ok ? "agree" : "DISAGREE"));
    }
  }
  out.summary = std::to_string(agree) + "/" + std::to_string(total) + " (pair, family) checks agree";
  if (c.pairs.size() < 15) {
    out.passed = false;
    out.summary += "; corpus has fewer than 15 pairs";
  }
  return out;
}

Criterion determinism(const Report& first, const Report& second) {
  Criterion out{7, "determinism", false, {}, json::object()};
  std::string a = to_json(first).dump(2), b = to_json(second).dump(2);
  out.passed = a == b;
  out.details["bytes"] = a.size();
  out.summary = out.passed ? "two suite runs gave byte-identical reports (" + std::to_string(a.size()) + " bytes)"
                           : "suite reports differ between runs";
  return out;
}

Report run_suite(const corpus::Corpus& c, const Config& cfg) {
  Report r;
  r.criteria.push_back(beta_validity(c, cfg));
  r.criteria.push_back(eta_separation(cfg));
  r.criteria.push_back(unsolvable_separation(cfg));
  r.criteria.push_back(wire_axioms(c, cfg));
  r.criteria.push_back(optimisation(c, cfg));
  r.criteria.push_back(tree_agreement(c, cfg));
  return r;
}

json to_json(const Criterion& c) {
  return json{{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"summary", c.summary}, {"details", c.details}};
}

json to_json(const Report& r) {
  json j;
  j["passed"] = r.passed();
  auto list = json::array();
  for (const auto& c : r.criteria) list.push_back(to_json(c));
  j["criteria"] = std::move(list);
  return j;
}

std::string render(const Criterion& c) {
  return std::string(c.passed ? "PASS" : "FAIL") + "  criterion " + std::to_string(c.id) + " (" + c.title +
         "): " + c.summary;
}

}  // namespace pilab::suite
