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

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pilab/corpus/corpus.hpp"
#include "pilab/equiv/equivalence.hpp"

namespace pilab::suite {

struct Config {
  equiv::Budget budget{3, 16, 20000};
  std::size_t fuel = 200;
  std::size_t strong_depth = 4;  // depth of the "never distinguished" checks of criteria 2 to 4
  std::size_t max_depth = 6;     // deepest search for a separating depth
  std::function<void(const std::string&)> log;  // progress lines; may be empty
};

struct Criterion {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string summary;
  nlohmann::json details;
};

struct Report {
  std::vector<Criterion> criteria;
  bool passed() const;
};

Criterion beta_validity(const corpus::Corpus& c, const Config& cfg);
Criterion eta_separation(const Config& cfg);
Criterion unsolvable_separation(const Config& cfg);
Criterion wire_axioms(const corpus::Corpus& c, const Config& cfg);
Criterion optimisation(const corpus::Corpus& c, const Config& cfg);
Criterion tree_agreement(const corpus::Corpus& c, const Config& cfg);
/// Compares the serialised reports of two runs byte for byte.
Criterion determinism(const Report& first, const Report& second);

/// Criteria 1 to 6, in order.
Report run_suite(const corpus::Corpus& c, const Config& cfg);

nlohmann::json to_json(const Criterion& c);
nlohmann::json to_json(const Report& r);
std::string render(const Criterion& c);

}  // namespace pilab::suite
