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

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "pilab/corpus/corpus.hpp"
#include "pilab/suite/suite.hpp"

// Runs the acceptance suite twice and prints one line per criterion.
int main(int argc, char** argv) {
  using namespace pilab;
  std::string path = argc > 1 ? argv[1] : corpus::default_corpus_path();
  corpus::Corpus c;
  try {
    c = corpus::load_corpus(path);
  } catch (const corpus::CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  suite::Config cfg;
  auto start = std::chrono::steady_clock::now();
  cfg.log = [&](const std::string& line) {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "[" << static_cast<long>(s) << "s] " << line << "\n";
  };
  suite::Report first = suite::run_suite(c, cfg);
  cfg.log = nullptr;
  suite::Report second = suite::run_suite(c, cfg);
  first.criteria.push_back(suite::determinism(first, second));
  for (const auto& cr : first.criteria) std::cout << suite::render(cr) << "\n";
  return first.passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
