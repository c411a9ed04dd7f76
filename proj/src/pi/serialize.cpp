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


#include "pilab/pi/serialize.hpp"

namespace pilab::pi {

using nlohmann::json;

namespace {

json names_to_json(const std::vector<Name>& ns) {
  json a = json::array();
  for (const auto& n : ns) a.push_back(name_to_json(n));
  return a;
}

std::vector<Name> names_from_json(const json& j) {
  std::vector<Name> out;
  for (const auto& n : j) out.push_back(name_from_json(n));
  return out;
}

}  // namespace

json name_to_json(const Name& n) { return {{"id", n.id}, {"sort", n.sort == Sort::Loc ? "Loc" : "Var"}}; }

Name name_from_json(const json& j) {
  const std::string sort = j.at("sort").get<std::string>();
  if (sort != "Loc" && sort != "Var") throw PiError("bad sort '" + sort + "' in JSON");
  return {j.at("id").get<std::string>(), sort == "Loc" ? Sort::Loc : Sort::Var};
}

json process_to_json(const Proc& p) {
  switch (p.kind) {
    case Proc::Kind::Nil:
      return {{"kind", "nil"}};
    case Proc::Kind::In:
    case Proc::Kind::Out:
    case Proc::Kind::Repl: {
      const char* k = p.kind == Proc::Kind::In ? "in" : p.kind == Proc::Kind::Out ? "out" : "repl";
      return {{"kind", k},
              {"subject", name_to_json(p.subject)},
              {"params", names_to_json(p.names)},
              {"body", process_to_json(*p.body())}};
    }
    case Proc::Kind::Res:
      return {{"kind", "res"}, {"bound", name_to_json(p.subject)}, {"body", process_to_json(*p.body())}};
    case Proc::Kind::Par: {
      json parts = json::array();
      for (const auto& q : p.parts) parts.push_back(process_to_json(*q));
      return {{"kind", "par"}, {"parts", parts}};
    }
    case Proc::Kind::Const:
      return {{"kind", "const"}, {"constant", p.constant}, {"args", names_to_json(p.names)}};
  }
  return {};
}

ProcPtr process_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k == "nil") return nil();
  if (k == "in" || k == "out" || k == "repl") {
    Name s = name_from_json(j.at("subject"));
    auto params = names_from_json(j.at("params"));
    auto body = process_from_json(j.at("body"));
    if (k == "in") return input(s, params, body);
    if (k == "out") return output(s, params, body);
    return repl(s, params, body);
  }
  if (k == "res") return res(name_from_json(j.at("bound")), process_from_json(j.at("body")));
  if (k == "par") {
    std::vector<ProcPtr> parts;
    for (const auto& q : j.at("parts")) parts.push_back(process_from_json(q));
    return par(std::move(parts));
  }
  if (k == "const") return call(j.at("constant").get<std::string>(), names_from_json(j.at("args")));
  throw PiError("unknown process kind '" + k + "' in JSON");
}

json action_to_json(const Action& a) {
  switch (a.kind) {
    case Action::Kind::Tau:
      return {{"kind", "tau"}};
    case Action::Kind::In:
    case Action::Kind::Out:
      return {{"kind", a.kind == Action::Kind::In ? "in" : "out"},
              {"subject", name_to_json(a.subject)},
              {"bound", names_to_json(a.bound)},
              {"text", to_string(a)}};
  }
  return {};
}

Action action_from_json(const json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k == "tau") return Action::tau();
  Action a;
  if (k == "in") {
    a.kind = Action::Kind::In;
  } else if (k == "out") {
    a.kind = Action::Kind::Out;
  } else {
    throw PiError("unknown action kind '" + k + "' in JSON");
  }
  a.subject = name_from_json(j.at("subject"));
  a.bound = names_from_json(j.at("bound"));
  return a;
}

}  // namespace pilab::pi
