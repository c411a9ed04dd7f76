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

#include "pilab/pi/sort_check.hpp"

namespace pilab::pi {

namespace {

const char* sort_name(Sort s) { return s == Sort::Loc ? "Loc" : "Var"; }

std::string sorts_of(const std::vector<Name>& ns) {
  std::string out = "(";
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i) out += ',';
    out += sort_name(ns[i].sort);
  }
  return out + ")";
}

void check(const Proc& p, const ConstEnv& env, const std::string& path, std::vector<SortIssue>& out) {
  switch (p.kind) {
    case Proc::Kind::Nil:
      return;
    case Proc::Kind::In:
    case Proc::Kind::Out:
    case Proc::Kind::Repl: {
      const char* tag = p.kind == Proc::Kind::Out ? "out" : (p.kind == Proc::Kind::Repl ? "repl" : "in");
      std::string here = path + tag + "(" + to_string(p.subject) + ")";
      bool ok = p.subject.sort == Sort::Loc
                    ? (p.names.size() == 2 && p.names[0].sort == Sort::Var && p.names[1].sort == Sort::Loc)
                    : (p.names.size() == 1 && p.names[0].sort == Sort::Loc);
      if (!ok) {
        out.push_back({here, std::string(sort_name(p.subject.sort)) + " name " + to_string(p.subject) +
                                 " cannot carry " + sorts_of(p.names) + "; expected " +
                                 (p.subject.sort == Sort::Loc ? "(Var,Loc)" : "(Loc)")});
      }
      check(*p.body(), env, here + ".", out);
      return;
    }
    case Proc::Kind::Res:
      check(*p.body(), env, path + "nu(" + to_string(p.subject) + ").", out);
      return;
    case Proc::Kind::Par:
      for (std::size_t i = 0; i < p.parts.size(); ++i) {
        check(*p.parts[i], env, path + "par[" + std::to_string(i) + "].", out);
      }
      return;
    case Proc::Kind::Const: {
      std::string here = path + p.constant;
      const Definition* def = env.find(p.constant);
      if (!def) {
        out.push_back({here, "unknown constant " + p.constant});
        return;
      }
      if (def->params.size() != p.names.size()) {
        out.push_back({here, "arity mismatch: expected " + std::to_string(def->params.size()) + ", got " +
                                 std::to_string(p.names.size())});
        return;
      }
      for (std::size_t i = 0; i < p.names.size(); ++i) {
        if (def->params[i].sort != p.names[i].sort) {
          out.push_back({here, "argument " + std::to_string(i) + " (" + to_string(p.names[i]) +
                                   ") should be " + sort_name(def->params[i].sort)});
        }
      }
      return;
    }
  }
}

}  // namespace

std::vector<SortIssue> sort_check(const Proc& p, const ConstEnv& env) {
  std::vector<SortIssue> out;
  check(p, env, "", out);
  return out;
}

std::vector<SortIssue> sort_check(const ConstEnv& env) {
  std::vector<SortIssue> out;
  for (const auto& name : env.names()) {
    check(*env.at(name).body, env, name + ":", out);
  }
  return out;
}

}  // namespace pilab::pi
