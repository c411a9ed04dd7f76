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

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pilab/corpus/corpus.hpp"
#include "pilab/encodings/encodings.hpp"
#include "pilab/equiv/equivalence.hpp"
#include "pilab/lambda/term.hpp"
#include "pilab/lambda/trees.hpp"
#include "pilab/pi/lts.hpp"
#include "pilab/pi/normalize.hpp"
#include "pilab/pi/parse.hpp"
#include "pilab/pi/serialize.hpp"
#include "pilab/pi/sort_check.hpp"
#include "pilab/suite/suite.hpp"
#include "pilab/wires/axioms.hpp"
#include "pilab/wires/wires.hpp"

namespace {

using namespace pilab;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string family = "IO";
  equiv::Budget budget;
  std::size_t fuel = 200;
  bool json = false;
  std::string corpus;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

wires::Family family_of(const Options& o) { return wires::parse_family(o.family); }

// A lambda term, or a raw process when the text is not a term.
struct Subject {
  std::optional<lambda::TermPtr> term;
  pi::ProcPtr process;
  std::string label;
};

Subject read_subject(const std::string& text, bool raw, const Options& o, const std::string& variant,
                     const std::string& location) {
  const wires::WireEnv& w = wires::wire_env(family_of(o));
  Subject s;
  auto from_process = [&] {
    s.process = pi::parse_process(text);
    auto issues = pi::sort_check(*s.process, w.consts);
    if (!issues.empty()) throw UsageError("sort error at " + issues.front().path + ": " + issues.front().message);
    s.label = pi::to_string(*s.process);
  };
  if (raw) {
    from_process();
    return s;
  }
  lambda::TermPtr m;
  try {
    m = lambda::parse_term(text);
  } catch (const lambda::ParseError& e) {
    try {
      from_process();
      return s;
    } catch (const pi::ParseError&) {
      throw e;
    }
  }
  enc::Variant v = enc::parse_variant(variant);
  if (v == enc::Variant::Milner) throw UsageError("the Milner encoding has no LTS in this tool");
  s.term = m;
  s.process = enc::encode(v, family_of(o), m, pi::loc(location)).process;
  s.label = lambda::to_string(*m);
  return s;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_encode(const Options& o, const std::string& text, const std::string& variant, const std::string& location,
               bool sugared) {
  auto m = lambda::parse_term(text);
  auto a = enc::encode(enc::parse_variant(variant), family_of(o), m, pi::loc(location));
  if (a.process) {
    auto issues = pi::sort_check(*a.process, a.env());
    if (!issues.empty()) throw UsageError("sort error at " + issues.front().path + ": " + issues.front().message);
  }
  if (o.json) {
    print(enc::to_json(a));
  } else {
    std::cout << (sugared ? a.sugared_text() : a.text()) << "\n";
  }
  return kOk;
}

std::vector<std::size_t> parse_path(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad trace index '" + item + "'");
    }
  }
  return out;
}

struct Explorer {
  const pi::ConstEnv& env;
  std::size_t limit;
  std::size_t edges = 0;
  bool truncated = false;

  json expand(const pi::Canonical& s, std::size_t depth, std::size_t base) {
    json list = json::array();
    if (depth == 0) return list;
    auto ts = pi::canonical_transitions(s, env, base);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (edges >= limit) {
        truncated = true;
        break;
      }
      ++edges;
      json e{{"index", i},
             {"action", pi::to_string(ts[i].action)},
             {"action_ast", pi::action_to_json(ts[i].action)},
             {"target", ts[i].target.key},
             {"target_ast", pi::process_to_json(*ts[i].target.proc)}};
      json next = expand(ts[i].target, depth - 1, base + ts[i].action.bound.size());
      if (!next.empty()) e["next"] = std::move(next);
      list.push_back(std::move(e));
    }
    return list;
  }
};

void render_edges(const json& list, const std::string& indent) {
  for (const auto& e : list) {
    std::cout << indent << "[" << e["index"].get<std::size_t>() << "] " << e["action"].get<std::string>() << "  ->  "
              << e["target"].get<std::string>() << "\n";
    if (e.contains("next")) render_edges(e["next"], indent + "    ");
  }
}

int cmd_lts(const Options& o, const std::string& text, bool raw, const std::string& variant,
            const std::string& location, const std::string& trace, std::size_t limit) {
  Subject s = read_subject(text, raw, o, variant, location);
  const pi::ConstEnv& env = wires::wire_env(family_of(o)).consts;
  pi::Canonical state = pi::canonicalize(s.process, env);
  std::size_t base = 0;
  json path = json::array();
  for (std::size_t idx : parse_path(trace)) {
    auto ts = pi::canonical_transitions(state, env, base);
    if (idx >= ts.size()) {
      throw UsageError("trace index " + std::to_string(idx) + " out of range (" + std::to_string(ts.size()) +
                       " transitions)");
    }
    path.push_back({{"index", idx}, {"action", pi::to_string(ts[idx].action)}});
    base += ts[idx].action.bound.size();
    state = ts[idx].target;
  }
  Explorer ex{env, limit};
  json edges = ex.expand(state, o.budget.depth, base);
  if (o.json) {
    print(json{{"family", o.family},
               {"trace", path},
               {"state", state.key},
               {"state_ast", pi::process_to_json(*state.proc)},
               {"depth", o.budget.depth},
               {"transitions", edges},
               {"truncated", ex.truncated}});
    return kOk;
  }
  for (const auto& step : path) {
    std::cout << "trace [" << step["index"].get<std::size_t>() << "] " << step["action"].get<std::string>() << "\n";
  }
  std::cout << "state: " << state.key << "\n";
  render_edges(edges, "");
  if (edges.empty()) std::cout << "(no transitions)\n";
  if (ex.truncated) std::cout << "(truncated after " << limit << " transitions)\n";
  return kOk;
}

int verdict_code(equiv::Verdict::Kind k) {
  switch (k) {
    case equiv::Verdict::Kind::Indistinguishable:
      return kOk;
    case equiv::Verdict::Kind::Distinguished:
      return kNegative;
    case equiv::Verdict::Kind::Inconclusive:
      break;
  }
  return kUsage;
}

int cmd_bisim(const Options& o, const std::string& left, const std::string& right, bool raw,
              const std::string& variant, const std::string& relation, bool plain) {
  Subject a = read_subject(left, raw, o, variant, "p");
  Subject b = read_subject(right, raw, o, variant, "p");
  const wires::WireEnv& w = wires::wire_env(family_of(o));
  equiv::UpTo up;
  if (!plain) up.transitive = {w.loc_wire, w.var_wire};
  equiv::Relation rel = equiv::parse_relation(relation);
  equiv::Verdict v = equiv::play(rel, a.process, b.process, w.consts, o.budget, up);
  if (o.json) {
    json j = equiv::verdict_to_json(v);
    j["family"] = o.family;
    j["left"] = a.label;
    j["right"] = b.label;
    print(j);
    return verdict_code(v.kind);
  }
  std::cout << equiv::to_string(v.kind) << " (" << equiv::to_string(rel) << ", depth " << v.budget.depth << ", tau "
            << v.budget.tau << ", states " << v.states_left << "/" << v.states_right << ")";
  if (v.up_to_wires) std::cout << " up to wire contraction";
  if (v.tau_limited) std::cout << " [tau budget reached]";
  std::cout << "\n";
  if (!v.reason.empty()) std::cout << "reason: " << v.reason << "\n";
  if (v.witness) {
    auto rep = equiv::explain_witness(*v.witness, rel, o.budget, a.process, b.process, w.consts,
                                      v.up_to_wires ? up : equiv::UpTo{});
    for (const auto& line : rep.lines) std::cout << line << "\n";
  }
  return verdict_code(v.kind);
}

lambda::TreeVerdict compare(const std::string& mode, const lambda::TermPtr& m, const lambda::TermPtr& n,
                            const Options& o) {
  if (mode == "BTinf") return lambda::btinf_bisim(m, n, o.budget.depth, o.fuel);
  return lambda::tree_equal(mode == "LT" ? lambda::TreeMode::LT : lambda::TreeMode::BT, m, n, o.budget.depth, o.fuel);
}

int cmd_tree(const Options& o, const std::string& left, const std::string& right, const std::string& mode) {
  auto m = lambda::parse_term(left);
  if (right.empty()) {
    if (mode == "BTinf") throw UsageError("BTinf needs two terms (-t1/-t2)");
    auto t = lambda::build_tree(mode == "LT" ? lambda::TreeMode::LT : lambda::TreeMode::BT, m, o.budget.depth, o.fuel);
    if (o.json) {
      print(lambda::tree_to_json(t));
    } else {
      std::cout << lambda::render_tree(t) << "\n";
    }
    return kOk;
  }
  auto n = lambda::parse_term(right);
  auto v = compare(mode, m, n, o);
  if (o.json) {
    json j = lambda::verdict_to_json(v);
    j["mode"] = mode;
    print(j);
  } else {
    switch (v.kind) {
      case lambda::TreeVerdict::Kind::Equal:
        std::cout << "equal up to depth " << v.depth << "\n";
        break;
      case lambda::TreeVerdict::Kind::Different: {
        std::cout << "different at path [";
        for (std::size_t i = 0; i < v.path.size(); ++i) std::cout << (i ? "," : "") << v.path[i];
        std::cout << "]: " << v.reason << "\n";
        break;
      }
      case lambda::TreeVerdict::Kind::Inconclusive:
        std::cout << "inconclusive: " << v.reason << "\n";
        break;
    }
  }
  if (v.kind == lambda::TreeVerdict::Kind::Equal) return kOk;
  return v.kind == lambda::TreeVerdict::Kind::Different ? kNegative : kUsage;
}

int cmd_wires_show(const Options& o) {
  const wires::WireEnv& w = wires::wire_env(family_of(o));
  auto sugared = wires::sugared_definitions(family_of(o));
  if (o.json) {
    json list = json::array();
    for (const auto& d : sugared) {
      const pi::Definition& plain = w.consts.at(d.name);
      json params = json::array();
      for (const auto& p : plain.params) params.push_back(pi::name_to_json(p));
      list.push_back({{"name", d.name},
                      {"params", params},
                      {"sugared", wires::to_string(*d.body)},
                      {"body", pi::to_string(*plain.body)},
                      {"ast", pi::process_to_json(*plain.body)}});
    }
    print(json{{"family", o.family}, {"loc_wire", w.loc_wire}, {"var_wire", w.var_wire}, {"definitions", list}});
    return kOk;
  }
  for (const auto& d : sugared) {
    const pi::Definition& plain = w.consts.at(d.name);
    std::string params;
    for (const auto& p : plain.params) params += (params.empty() ? "" : ", ") + pi::to_string(p);
    std::cout << d.name << "(" << params << ") = " << wires::to_string(*d.body) << "\n";
    std::cout << "  desugared: " << pi::to_string(*plain.body) << "\n";
  }
  return kOk;
}

int cmd_wires_check(const Options& o, std::size_t instances) {
  corpus::Corpus c = corpus::load_corpus(o.corpus);
  std::vector<lambda::TermPtr> inst;
  for (const auto& e : c.instances) inst.push_back(e.term);
  wires::AxiomBudget b;
  b.game = o.budget;
  b.instances = instances;
  auto report = wires::check_wire_axioms(wires::wire_env(family_of(o)), b, inst);
  if (o.json) {
    print(wires::to_json(report));
  } else {
    for (const auto& l : report.laws) {
      std::cout << "law " << l.law << " [" << l.sort << "] " << l.verdict << " (" << l.method << ", " << l.checked
                << " checked)";
      if (!l.detail.empty()) std::cout << ": " << l.detail;
      std::cout << "\n";
    }
  }
  return report.passed() ? kOk : kNegative;
}

int cmd_suite(const Options& o, bool quiet) {
  corpus::Corpus c = corpus::load_corpus(o.corpus);
  suite::Config cfg;
  cfg.budget = o.budget;
  cfg.fuel = o.fuel;
  if (!quiet) cfg.log = [](const std::string& line) { std::cerr << line << "\n"; };
  suite::Report first = suite::run_suite(c, cfg);
  cfg.log = nullptr;
  suite::Report second = suite::run_suite(c, cfg);
  suite::Report full = first;
  full.criteria.push_back(suite::determinism(first, second));
  if (o.json) {
    print(suite::to_json(full));
  } else {
    for (const auto& cr : full.criteria) std::cout << suite::render(cr) << "\n";
  }
  return full.passed() ? kOk : kNegative;
}

// CLI11 takes single-dash options as one letter; accept -t1 and -t2 as spelled.
std::vector<std::string> normalise_args(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-t1" || a == "-t2") a = "-" + a;
    out.push_back(std::move(a));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pilab: lambda-calculus encodings into the internal pi-calculus with wires"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  if (const char* env = std::getenv("PILAB_CORPUS")) o.corpus = env;
  if (o.corpus.empty()) o.corpus = corpus::default_corpus_path();
  app.add_option("-f,--family", o.family, "wire family: IO, OI or P")->capture_default_str();
  app.add_option("-d,--depth", o.budget.depth, "depth bound (attacker moves, LTS levels, tree levels)")
      ->capture_default_str();
  app.add_option("--tau", o.budget.tau, "tau steps absorbable by one weak answer")->capture_default_str();
  app.add_option("--state-cap", o.budget.state_cap, "distinct states per side")->capture_default_str();
  app.add_option("--fuel", o.fuel, "reduction steps for lambda-side probes")->capture_default_str();
  app.add_option("--corpus", o.corpus, "corpus file")->capture_default_str();
  app.add_flag("--json", o.json, "JSON output");

  std::string term, term2, variant = "optimised", location = "p", relation = "weak", mode = "BT", trace;
  bool sugared = false, raw = false, plain = false, quiet = false;
  std::size_t limit = 5000, instances = 10;

  auto* encode = app.add_subcommand("encode", "encode a lambda term");
  encode->add_option("-t,--term", term, "lambda term")->required();
  encode->add_option("--variant", variant, "milner, abstract or optimised")->capture_default_str();
  encode->add_option("-l,--loc", location, "location name")->capture_default_str();
  encode->add_flag("--sugared", sugared, "print before desugaring wires and permeable prefixes");

  auto* lts = app.add_subcommand("lts", "list transitions of an encoded term or a process");
  lts->add_option("-t,--term", term, "lambda term, or a process if it does not parse as a term")->required();
  lts->add_flag("-P,--process", raw, "read the subject as a process");
  lts->add_option("--variant", variant, "abstract or optimised")->capture_default_str();
  lts->add_option("-l,--loc", location, "location name")->capture_default_str();
  lts->add_option("--trace", trace, "comma-separated transition indices to follow first");
  lts->add_option("--limit", limit, "maximum transitions printed")->capture_default_str();

  auto* bisim = app.add_subcommand("bisim", "bounded equivalence game between two subjects");
  bisim->add_option("--t1", term, "left term or process")->required();
  bisim->add_option("--t2", term2, "right term or process")->required();
  bisim->add_flag("-P,--process", raw, "read both subjects as processes");
  bisim->add_option("--variant", variant, "abstract or optimised")->capture_default_str();
  bisim->add_option("-r,--relation", relation, "strong, weak or expand")->capture_default_str();
  bisim->add_flag("--plain", plain, "disable wire contraction");

  auto* tree = app.add_subcommand("tree", "Levy-Longo and Boehm trees");
  tree->add_option("-t,--term,--t1", term, "lambda term")->required();
  tree->add_option("--t2", term2, "second term to compare with");
  tree->add_option("-m,--mode", mode, "LT, BT or BTinf")
      ->check(CLI::IsMember({"LT", "BT", "BTinf"}))
      ->capture_default_str();

  auto* wires_cmd = app.add_subcommand("wires", "wire definitions and axiom checks");
  wires_cmd->require_subcommand(1);
  auto* show = wires_cmd->add_subcommand("show", "print the wire definitions of a family");
  auto* check = wires_cmd->add_subcommand("check", "check the wire laws on corpus instances");
  check->add_option("-n,--instances", instances, "instances for the encoded-context laws")->capture_default_str();
  wires_cmd->fallthrough();

  auto* suite_cmd = app.add_subcommand("suite", "run the acceptance suite");
  suite_cmd->add_flag("-q,--quiet", quiet, "no progress lines");

  try {
    app.parse(normalise_args(argc, argv));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    family_of(o);
    if (*encode) return cmd_encode(o, term, variant, location, sugared);
    if (*lts) return cmd_lts(o, term, raw, variant, location, trace, limit);
    if (*bisim) return cmd_bisim(o, term, term2, raw, variant, relation, plain);
    if (*tree) return cmd_tree(o, term, term2, mode);
    if (*show) return cmd_wires_show(o);
    if (*check) return cmd_wires_check(o, instances);
    if (*suite_cmd) return cmd_suite(o, quiet);
  } catch (const lambda::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pi::PiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const corpus::CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const equiv::WitnessError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
