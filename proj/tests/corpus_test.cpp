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

#include <doctest.h>

#include "pilab/corpus/corpus.hpp"
#include "pilab/lambda/reduction.hpp"
#include "pilab/lambda/term.hpp"
#include "pilab/suite/suite.hpp"

using namespace pilab;

TEST_CASE("corpus parsing") {
  auto c = corpus::parse_corpus(
      "# comment\n"
      "term I \\x.x\n"
      "redex r (\\x.x) y\n"
      "instance i x y\n"
      "pair p x ; \\y.x y ; BT=D LT=D BTinf=E\n");
  REQUIRE(c.terms.size() == 1);
  REQUIRE(c.redexes.size() == 1);
  REQUIRE(c.instances.size() == 1);
  REQUIRE(c.pairs.size() == 1);
  CHECK(c.pairs[0].expected.bt == 'D');
  CHECK(c.pairs[0].expected.btinf == 'E');
  CHECK(c.find_term("I") != nullptr);
  CHECK(c.find_term("J") == nullptr);
  CHECK_THROWS_AS(corpus::parse_corpus("redex r x y\n"), corpus::CorpusError);
  CHECK_THROWS_AS(corpus::parse_corpus("pair p x\n"), corpus::CorpusError);
  CHECK_THROWS_AS(corpus::parse_corpus("thing t x\n"), corpus::CorpusError);
  CHECK_THROWS_AS(corpus::parse_corpus("term t (x\n"), corpus::CorpusError);
}

TEST_CASE("shipped corpus") {
  auto c = corpus::load_corpus(corpus::default_corpus_path());
  CHECK(c.terms.size() >= 30);
  CHECK(c.redexes.size() >= 20);
  CHECK(c.instances.size() >= 10);
  CHECK(c.pairs.size() >= 15);
  for (const auto& r : c.redexes) {
    CHECK_MESSAGE(lambda::probe_hnf(r.term, 200).is_hnf(), r.name);
  }
}

TEST_CASE("fast criteria") {
  suite::Config cfg;
  CHECK(suite::eta_separation(cfg).passed);
  CHECK(suite::unsolvable_separation(cfg).passed);
  auto r = suite::render(suite::eta_separation(cfg));
  CHECK(r.rfind("PASS  criterion 2", 0) == 0);
}
