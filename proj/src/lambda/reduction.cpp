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

#include "pilab/lambda/reduction.hpp"

#include <map>
#include <set>

namespace pilab::lambda {

namespace {

void add_unique(std::vector<TermPtr>& out, std::set<std::string>& seen, TermPtr t) {
  if (seen.insert(canonical_key(*t)).second) out.push_back(std::move(t));
}

TermPtr contract(const Term& redex) {
  const Term& f = *redex.fun();
  return substitute(f.body(), f.name, redex.arg());
}

void full_rec(const TermPtr& m, std::vector<TermPtr>& out) {
  switch (m->kind) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Lam: {
      std::vector<TermPtr> inner;
      full_rec(m->body(), inner);
      for (auto& b : inner) out.push_back(lam(m->name, std::move(b)));
      return;
    }
    case Term::Kind::App: {
      if (m->fun()->is_lam()) out.push_back(contract(*m));
      std::vector<TermPtr> inner;
      full_rec(m->fun(), inner);
      for (auto& f : inner) out.push_back(app(std::move(f), m->arg()));
      inner.clear();
      full_rec(m->arg(), inner);
      for (auto& a : inner) out.push_back(app(m->fun(), std::move(a)));
      return;
    }
  }
}

void sn_rec(const TermPtr& m, std::vector<TermPtr>& out) {
  switch (m->kind) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Lam: {
      std::vector<TermPtr> inner;
      sn_rec(m->body(), inner);
      for (auto& b : inner) out.push_back(lam(m->name, std::move(b)));
      return;
    }
    case Term::Kind::App: {
      if (m->fun()->is_lam()) out.push_back(contract(*m));
      std::vector<TermPtr> inner;
      sn_rec(m->fun(), inner);
      for (auto& f : inner) out.push_back(app(std::move(f), m->arg()));
      return;
    }
  }
}

std::vector<TermPtr> dedupe(std::vector<TermPtr> raw) {
  std::vector<TermPtr> out;
  std::set<std::string> seen;
  for (auto& t : raw) add_unique(out, seen, std::move(t));
  return out;
}

// Application spine of a body: head and arguments in order.
void spine(const TermPtr& body, TermPtr& head, std::vector<TermPtr>& args) {
  const TermPtr* cur = &body;
  std::vector<TermPtr> rev;
  while ((*cur)->is_app()) {
    rev.push_back((*cur)->arg());
    cur = &(*cur)->fun();
  }
  head = *cur;
  args.assign(rev.rbegin(), rev.rend());
}

}  // namespace

std::vector<TermPtr> step_full_beta(const TermPtr& m) {
  std::vector<TermPtr> raw;
  full_rec(m, raw);
  return dedupe(std::move(raw));
}

std::vector<TermPtr> step_strong_cbn(const TermPtr& m) {
  std::vector<TermPtr> raw;
  sn_rec(m, raw);
  return dedupe(std::move(raw));
}

LambdaSpine strip_lambdas(const TermPtr& m) {
  LambdaSpine s;
  TermPtr cur = m;
  while (cur->is_lam()) {
    s.lams.push_back(cur->name);
    cur = cur->body();
  }
  s.body = cur;
  return s;
}

std::optional<TermPtr> step_head(const TermPtr& m) {
  LambdaSpine s = strip_lambdas(m);
  TermPtr head;
  std::vector<TermPtr> args;
  spine(s.body, head, args);
  if (!head->is_lam() || args.empty()) return std::nullopt;
  TermPtr reduced = substitute(head->body(), head->name, args.front());
  for (std::size_t i = 1; i < args.size(); ++i) reduced = app(reduced, args[i]);
  return lam(s.lams, reduced);
}

TermPtr HnfProbe::term() const { return lam(lams, app(var(head), args)); }

namespace {

bool decompose_hnf(const TermPtr& t, HnfProbe& out) {
  LambdaSpine s = strip_lambdas(t);
  TermPtr head;
  std::vector<TermPtr> args;
  spine(s.body, head, args);
  if (!head->is_var()) return false;
  out.outcome = HnfProbe::Outcome::Hnf;
  out.lams = std::move(s.lams);
  out.head = head->name;
  out.args = std::move(args);
  return true;
}

}  // namespace

HnfProbe probe_hnf(const TermPtr& m, std::size_t fuel) {
  HnfProbe probe;
  std::set<std::string> seen_bodies;
  TermPtr cur = m;
  for (std::size_t steps = 0;; ++steps) {
    if (decompose_hnf(cur, probe)) {
      probe.steps_used = steps;
      return probe;
    }
    if (!probe.loop_detected) {
      auto key = canonical_key(*strip_lambdas(cur).body);
      if (!seen_bodies.insert(std::move(key)).second) probe.loop_detected = true;
    }
    if (steps == fuel) break;
    auto next = step_head(cur);
    if (!next) break;  // unreachable: a non-hnf always has a head redex
    cur = *next;
  }
  probe.outcome = HnfProbe::Outcome::FuelExhausted;
  probe.steps_used = fuel;
  return probe;
}

OrderProbe probe_order(const TermPtr& m, std::size_t fuel) {
  OrderProbe probe;
  std::map<std::string, std::size_t> seen;  // body key -> binder count at first sight
  std::size_t last_growth = 0;
  TermPtr cur = m;
  std::size_t prev_lams = 0;
  for (std::size_t steps = 0;; ++steps) {
    HnfProbe hnf;
    if (decompose_hnf(cur, hnf)) {
      hnf.steps_used = steps;
      probe.outcome = OrderProbe::Outcome::SolvedInstead;
      probe.solved = std::move(hnf);
      probe.n = probe.solved.lams.size();
      probe.lams = probe.solved.lams;
      return probe;
    }
    LambdaSpine s = strip_lambdas(cur);
    if (s.lams.size() > prev_lams) last_growth = steps;
    prev_lams = s.lams.size();
    probe.lams = s.lams;
    probe.n = s.lams.size();
    if (!probe.omega_certified) {
      auto [it, inserted] = seen.emplace(canonical_key(*s.body), s.lams.size());
      if (!inserted) {
        if (it->second == s.lams.size()) {
          probe.outcome = OrderProbe::Outcome::Order;
          return probe;
        }
        probe.omega_certified = true;
      }
    }
    if (steps == fuel) break;
    cur = *step_head(cur);
  }
  if (probe.omega_certified || (probe.n > 0 && 2 * last_growth >= fuel && last_growth > 0)) {
    probe.outcome = OrderProbe::Outcome::AtLeast;
  } else {
    probe.outcome = OrderProbe::Outcome::Order;
    probe.fuel_limited = true;
  }
  return probe;
}

}  // namespace pilab::lambda
