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

#include "pilab/pi/analysis.hpp"
#include "pilab/pi/process.hpp"

#include <algorithm>

namespace pilab::pi {

struct ConstEnv::Data {
  std::map<std::string, Definition> defs;
  std::map<std::string, ConstInfo> info;
};

namespace {

using Table = std::map<std::string, ConstInfo>;

void usage_walk(const Proc& p, std::multiset<Name>& bound, std::map<Name, PolaritySet>& out,
                const Table& table) {
  auto mark = [&](const Name& n, PolaritySet bits) {
    if (!bound.count(n)) out[n] |= bits;
  };
  switch (p.kind) {
    case Proc::Kind::Nil:
      return;
    case Proc::Kind::In:
    case Proc::Kind::Out:
    case Proc::Kind::Repl: {
      mark(p.subject, static_cast<PolaritySet>(p.kind == Proc::Kind::Out ? Polarity::Out : Polarity::In));
      std::vector<std::multiset<Name>::iterator> added;
      for (const auto& n : p.names) added.push_back(bound.insert(n));
      usage_walk(*p.body(), bound, out, table);
      for (auto it : added) bound.erase(it);
      return;
    }
    case Proc::Kind::Res: {
      auto it = bound.insert(p.subject);
      usage_walk(*p.body(), bound, out, table);
      bound.erase(it);
      return;
    }
    case Proc::Kind::Par:
      for (const auto& q : p.parts) usage_walk(*q, bound, out, table);
      return;
    case Proc::Kind::Const: {
      const auto& info = table.at(p.constant);
      for (std::size_t i = 0; i < p.names.size(); ++i) mark(p.names[i], info.usage[i]);
      return;
    }
  }
}

}  // namespace

InitialActions initial_actions(const Proc& p, const std::map<std::string, ConstInfo>& table) {
  InitialActions out;
  switch (p.kind) {
    case Proc::Kind::Nil:
      return out;
    case Proc::Kind::In:
    case Proc::Kind::Repl:
      out.actions.insert({p.subject, Polarity::In});
      return out;
    case Proc::Kind::Out:
      out.actions.insert({p.subject, Polarity::Out});
      return out;
    case Proc::Kind::Res: {
      out = initial_actions(*p.body(), table);
      for (auto it = out.actions.begin(); it != out.actions.end();) {
        it = it->first == p.subject ? out.actions.erase(it) : std::next(it);
      }
      return out;
    }
    case Proc::Kind::Par:
      for (const auto& q : p.parts) {
        auto sub = initial_actions(*q, table);
        out.tau = out.tau || sub.tau;
        out.actions.insert(sub.actions.begin(), sub.actions.end());
      }
      break;
    case Proc::Kind::Const: {
      const auto& info = table.at(p.constant);
      out.tau = info.tau;
      for (const auto& [i, pol] : info.initial) out.actions.insert({p.names[i], pol});
      break;
    }
  }
  for (const auto& [n, pol] : out.actions) {
    if (pol == Polarity::In && out.actions.count({n, Polarity::Out})) out.tau = true;
  }
  return out;
}

std::map<Name, PolaritySet> name_usage(const Proc& p, const std::map<std::string, ConstInfo>& table) {
  std::multiset<Name> bound;
  std::map<Name, PolaritySet> out;
  usage_walk(p, bound, out, table);
  return out;
}

namespace {

void validate(const std::map<std::string, Definition>& defs) {
  for (const auto& [name, def] : defs) {
    std::set<Name> params(def.params.begin(), def.params.end());
    if (params.size() != def.params.size()) {
      throw PiError("constant " + name + " has repeated parameters");
    }
    std::set<Name> fn;
    try {
      // Arity and existence of every referenced constant.
      std::vector<const Proc*> stack{def.body.get()};
      while (!stack.empty()) {
        const Proc* p = stack.back();
        stack.pop_back();
        if (p->kind == Proc::Kind::Const) {
          auto it = defs.find(p->constant);
          if (it == defs.end()) throw PiError("unknown constant " + p->constant);
          if (it->second.params.size() != p->names.size()) {
            throw PiError("constant " + p->constant + " expects " +
                          std::to_string(it->second.params.size()) + " arguments, got " +
                          std::to_string(p->names.size()));
          }
        }
        for (const auto& q : p->parts) stack.push_back(q.get());
      }
      fn = free_names(*def.body);
    } catch (const PiError& e) {
      throw PiError("in definition of " + name + ": " + e.what());
    }
    for (const auto& n : fn) {
      if (!params.count(n)) {
        throw PiError("definition of " + name + " is not closed: free name " + to_string(n));
      }
    }
  }
}

Table analyse(const std::map<std::string, Definition>& defs) {
  Table table;
  for (const auto& [name, def] : defs) {
    table[name].usage.assign(def.params.size(), 0);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [name, def] : defs) {
      ConstInfo next;
      auto init = initial_actions(*def.body, table);
      next.tau = init.tau;
      for (const auto& [n, pol] : init.actions) {
        auto it = std::find(def.params.begin(), def.params.end(), n);
        if (it != def.params.end()) next.initial.insert({std::size_t(it - def.params.begin()), pol});
      }
      auto use = name_usage(*def.body, table);
      next.usage.assign(def.params.size(), 0);
      for (std::size_t i = 0; i < def.params.size(); ++i) {
        auto it = use.find(def.params[i]);
        if (it != use.end()) next.usage[i] = it->second;
      }
      ConstInfo& cur = table[name];
      if (next.tau != cur.tau || next.initial != cur.initial || next.usage != cur.usage) {
        cur = std::move(next);
        changed = true;
      }
    }
  }
  return table;
}

}  // namespace

ConstEnv::ConstEnv() : data_(std::make_shared<const Data>()) {}

ConstEnv::ConstEnv(std::vector<Definition> defs) {
  auto data = std::make_shared<Data>();
  for (auto& d : defs) {
    std::string key = d.name;
    if (!data->defs.emplace(key, std::move(d)).second) {
      throw PiError("constant " + key + " defined twice");
    }
  }
  validate(data->defs);
  data->info = analyse(data->defs);
  data_ = std::move(data);
}

const Definition* ConstEnv::find(const std::string& name) const {
  auto it = data_->defs.find(name);
  return it == data_->defs.end() ? nullptr : &it->second;
}

const Definition& ConstEnv::at(const std::string& name) const {
  const Definition* d = find(name);
  if (!d) throw PiError("unknown constant " + name);
  return *d;
}

const ConstInfo& ConstEnv::info(const std::string& name) const {
  auto it = data_->info.find(name);
  if (it == data_->info.end()) throw PiError("unknown constant " + name);
  return it->second;
}

const std::map<std::string, ConstInfo>& ConstEnv::table() const { return data_->info; }

std::vector<std::string> ConstEnv::names() const {
  std::vector<std::string> out;
  for (const auto& [name, def] : data_->defs) out.push_back(name);
  return out;
}

ConstEnv ConstEnv::extended(std::vector<Definition> more) const {
  std::vector<Definition> all;
  for (const auto& [name, def] : data_->defs) all.push_back(def);
  for (auto& d : more) all.push_back(std::move(d));
  return ConstEnv(std::move(all));
}

}  // namespace pilab::pi
