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


#include "pilab/corpus/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef PILAB_DEFAULT_CORPUS
#define PILAB_DEFAULT_CORPUS "data/corpus.txt"
#endif

namespace pilab::corpus {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Entry entry(const std::string& name, const std::string& text, std::size_t line) {
  try {
    return {name, text, lambda::parse_term(text)};
  } catch (const lambda::ParseError& e) {
    throw CorpusError("line " + std::to_string(line) + ": " + e.what());
  }
}

Expectation expectation(const std::string& fields, std::size_t line) {
  Expectation x;
  std::istringstream in(fields);
  std::string item;
  while (in >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq + 2 != item.size() || (item.back() != 'E' && item.back() != 'D')) {
      throw CorpusError("line " + std::to_string(line) + ": bad expectation '" + item + "'");
    }
    std::string key = item.substr(0, eq);
    if (key == "BT") {
      x.bt = item.back();
    } else if (key == "LT") {
      x.lt = item.back();
    } else if (key == "BTinf") {
      x.btinf = item.back();
    } else {
      throw CorpusError("line " + std::to_string(line) + ": unknown tree '" + key + "'");
    }
  }
  return x;
}

}  // namespace

const Entry* Corpus::find_term(std::string_view name) const {
  for (const auto* list : {&terms, &redexes, &instances}) {
    for (const auto& e : *list) {
      if (e.name == name) return &e;
    }
  }
  return nullptr;
}

Corpus parse_corpus(std::string_view text) {
  Corpus c;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::string l = trim(raw);
    if (l.empty()) continue;
    std::istringstream words(l);
    std::string kind, name;
    words >> kind >> name;
    std::string rest;
    std::getline(words, rest);
    rest = trim(rest);
    if (name.empty() || rest.empty()) throw CorpusError("line " + std::to_string(line) + ": incomplete entry");
    if (kind == "term") {
      c.terms.push_back(entry(name, rest, line));
    } else if (kind == "instance") {
      c.instances.push_back(entry(name, rest, line));
    } else if (kind == "redex") {
      Entry e = entry(name, rest, line);
      if (!e.term->is_app() || !e.term->fun()->is_lam()) {
        throw CorpusError("line " + std::to_string(line) + ": '" + name + "' is not a beta redex");
      }
      c.redexes.push_back(std::move(e));
    } else if (kind == "pair") {
      auto parts = split(rest, ';');
      if (parts.size() < 2 || parts.size() > 3) {
        throw CorpusError("line " + std::to_string(line) + ": pair needs two terms");
      }
      Pair p{name, entry(name + ".left", parts[0], line), entry(name + ".right", parts[1], line), {}};
      if (parts.size() == 3) p.expected = expectation(parts[2], line);
      c.pairs.push_back(std::move(p));
    } else {
      throw CorpusError("line " + std::to_string(line) + ": unknown entry kind '" + kind + "'");
    }
  }
  return c;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CorpusError("cannot open corpus '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_corpus(buf.str());
}

std::string default_corpus_path() {
  if (const char* env = std::getenv("PILAB_CORPUS"); env && *env) return env;
  return PILAB_DEFAULT_CORPUS;
}

}  // namespace pilab::corpus
