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


#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pilab/lambda/term.hpp"

namespace pilab::corpus {

using lambda::TermPtr;

struct Entry {
  std::string name;
  std::string text;
  TermPtr term;
};

// Expected tree relationship of a pair: 'E' equal, 'D' different.
struct Expectation {
  char bt = '?';
  char lt = '?';
  char btinf = '?';
};

struct Pair {
  std::string name;
  Entry left;
  Entry right;
  Expectation expected;
};

struct Corpus {
  std::vector<Entry> terms;
  std::vector<Entry> redexes;  // each a top-level beta redex
  std::vector<Entry> instances;  // bodies for the wire-law battery
  std::vector<Pair> pairs;

  const Entry* find_term(std::string_view name) const;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line format, '#' starts a comment:
///   term <name> <lambda term>
///   redex <name> <lambda term>
///   instance <name> <lambda term>
///   pair <name> <term> ; <term> [; BT=E|D LT=E|D BTinf=E|D]
Corpus parse_corpus(std::string_view text);
Corpus load_corpus(const std::string& path);

/// PILAB_CORPUS when set, else the corpus shipped with the sources.
std::string default_corpus_path();

}  // namespace pilab::corpus
