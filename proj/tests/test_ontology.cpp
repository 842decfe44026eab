// Copyright 2026 The Semmem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "semmem/error.hpp"
#include "semmem/ontology.hpp"
#include "support.hpp"

using namespace semmem;

namespace {

ErrorCode CodeOf(const std::string& triples, const std::string& lexicon) {
  try {
    testing::FromText(triples, lexicon);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIo;
}

std::vector<std::string> Lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string Join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

const char* kTwo = "{\"id\":\"ball\"}\n{\"id\":\"toy\"}\n";

}  // namespace

TEST_CASE("empty inputs give an empty network") {
  auto net = testing::FromText("", "");
  CHECK(net.size() == 0);
  CHECK(net.relation_count() == 0);
}

TEST_CASE("single triple") {
  auto net = testing::FromText("ball\tis_a\ttoy\t1.0\n", kTwo);
  CHECK(net.size() == 2);
  REQUIRE(net.relation_count() == 1);
  auto n = net.Neighbors("ball");
  REQUIRE(n.size() == 1);
  CHECK(n[0] == Neighbor{"toy", "is_a", 1.0, Polarity::kExcitatory});
  CHECK(net.InDegree(net.Require("toy")) == 1);
  CHECK(net.OutDegree(net.Require("toy")) == 0);
}

TEST_CASE("duplicate triples keep the maximum weight") {
  auto a = testing::FromText("ball\tis_a\ttoy\t0.4\nball\tis_a\ttoy\t0.9\n", kTwo);
  auto b = testing::FromText("ball\tis_a\ttoy\t0.9\nball\tis_a\ttoy\t0.4\n", kTwo);
  REQUIRE(a.relation_count() == 1);
  CHECK(a.Neighbors("ball")[0].weight == 0.9);
  CHECK(a.Serialize() == b.Serialize());
}

TEST_CASE("equal weights with mixed polarity resolve to inhibitory") {
  auto net = testing::FromText("ball\tr\ttoy\t0.5\t+\nball\tr\ttoy\t0.5\t-\n", kTwo);
  CHECK(net.Neighbors("ball")[0].polarity == Polarity::kInhibitory);
}

TEST_CASE("ingest errors carry codes") {
  CHECK(CodeOf("ball\tis_a\n", kTwo) == ErrorCode::kParse);
  CHECK(CodeOf("ball\tis_a\ttoy\t1.5\n", kTwo) == ErrorCode::kParse);
  CHECK(CodeOf("ball\tis_a\ttoy\t0\n", kTwo) == ErrorCode::kParse);
  CHECK(CodeOf("ball\tis_a\ttoy\tabc\n", kTwo) == ErrorCode::kParse);
  CHECK(CodeOf("ball\tis_a\ttoy\t1\tmaybe\n", kTwo) == ErrorCode::kParse);
  CHECK(CodeOf("ball\tis_a\tdoll\n", kTwo) == ErrorCode::kNotFound);
  CHECK(CodeOf("ball\tis_a\ttoy\n", "") == ErrorCode::kParse);
  CHECK(CodeOf("", "{bad json\n") == ErrorCode::kParse);
  CHECK(CodeOf("", "{\"id\":\"two words\"}\n") == ErrorCode::kParse);
  CHECK(CodeOf("", "{\"name\":\"x\"}\n") == ErrorCode::kParse);
  CHECK_THROWS_AS(SemanticNetwork::Ingest("/nonexistent/t.tsv", "/nonexistent/l.jsonl"), Error);
}

TEST_CASE("fixture neighbours and lookup") {
  auto net = testing::ToyNetwork();
  std::set<std::string> is_a = {"is_a"};
  auto n = net.Neighbors("ball/toy", &is_a);
  REQUIRE(n.size() == 1);
  CHECK(n[0] == Neighbor{"toy", "is_a", 1.0, Polarity::kExcitatory});
  CHECK(net.Neighbors("bald").empty());
  try {
    net.Neighbors("xyz");
    FAIL("expected NotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotFound);
  }
  CHECK(net.Lookup("ball") == std::vector<ConceptId>{"ball/dance", "ball/toy"});
  CHECK(net.Lookup("Ball") == net.Lookup("ball"));
  CHECK(net.Lookup("balls") == std::vector<ConceptId>{"ball/toy"});
  CHECK(net.Lookup("zebra").empty());
  CHECK(net.Lookup("coffee maker") == std::vector<ConceptId>{"coffee_maker"});
}

TEST_CASE("shared surfaces get mutual inhibition") {
  auto net = testing::ToyNetwork();
  std::set<std::string> comp = {"competes_with"};
  auto n = net.Neighbors("ball/toy", &comp);
  REQUIRE(n.size() == 1);
  CHECK(n[0] == Neighbor{"ball/dance", "competes_with", 0.8, Polarity::kInhibitory});

  IngestOptions off;
  off.sibling_inhibition = false;
  auto plain = SemanticNetwork::Ingest(testing::Fixture("toy/triples.tsv"),
                                       testing::Fixture("toy/lexicon.jsonl"), off);
  CHECK(plain.Neighbors("ball/toy", &comp).empty());
  CHECK(net.relation_count() == plain.relation_count() + 4);
}

TEST_CASE("edge views are sorted") {
  auto net = testing::ToyNetwork();
  for (ConceptIndex i = 0; i < net.size(); ++i) {
    auto out = net.OutEdges(i);
    for (std::size_t k = 1; k < out.size(); ++k) {
      CHECK(std::tie(out[k - 1].relation_type, out[k - 1].target) <
            std::tie(out[k].relation_type, out[k].target));
    }
    auto in = net.InEdges(i);
    for (std::size_t k = 1; k < in.size(); ++k) {
      CHECK(std::tie(in[k - 1].source, in[k - 1].relation_type) <
            std::tie(in[k].source, in[k].relation_type));
    }
    for (const Edge& e : in) CHECK(e.target == i);
  }
  for (ConceptIndex i = 1; i < net.size(); ++i) CHECK(net.id_at(i - 1) < net.id_at(i));
}

TEST_CASE("ingest does not depend on line order") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = testing::MakeRandomGraph(seed);
    auto base = testing::FromText(g.triples, g.lexicon).Serialize();
    std::mt19937_64 rng(seed + 1000);
    auto t = Lines(g.triples);
    auto l = Lines(g.lexicon);
    std::shuffle(t.begin(), t.end(), rng);
    std::shuffle(l.begin(), l.end(), rng);
    CHECK(testing::FromText(Join(t), Join(l)).Serialize() == base);
  }
}

TEST_CASE("declared names become surfaces") {
  auto net = testing::FromText("", "{\"id\":\"x1\",\"name\":\"Coffee  Maker\"}\n{\"id\":\"lonely\"}\n");
  CHECK(net.concept_at(net.Require("x1")).preferred_name == "Coffee  Maker");
  CHECK(net.Lookup("coffee maker") == std::vector<ConceptId>{"x1"});
  CHECK(net.Lookup("lonely") == std::vector<ConceptId>{"lonely"});
  CHECK(net.max_collocation_tokens() == 2);
}
