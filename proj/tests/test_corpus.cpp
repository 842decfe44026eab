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
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "semmem/cluster.hpp"
#include "semmem/corpus_io.hpp"
#include "semmem/error.hpp"
#include "semmem/synthetic.hpp"
#include "support.hpp"

using namespace semmem;
using namespace semmem::corpus;

namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

std::vector<Document> Parse(const std::string& body) {
  std::istringstream in(body);
  return ParseCorpus(in);
}

}  // namespace

TEST_CASE("corpus parsing") {
  auto docs = Parse("{\"id\":\"a\",\"label\":\"x\",\"text\":\"hi\"}\n\n{\"id\":\"b\",\"label\":null,\"text\":\"yo\"}\n"
                    "{\"id\":\"c\",\"text\":\"\"}\n");
  REQUIRE(docs.size() == 3);
  CHECK(docs[0].label == "x");
  CHECK_FALSE(docs[1].label.has_value());
  CHECK_FALSE(docs[2].label.has_value());
  CHECK(docs[2].text.empty());
  CHECK(Parse("").empty());
}

TEST_CASE("corpus parse errors") {
  CHECK(CodeOf([] { Parse("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"a\",\"text\":\"y\"}\n"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { Parse("{\"id\":\"a\",\"text\":\n"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { Parse("{\"text\":\"x\"}\n"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { Parse("[1,2]\n"); }) == ErrorCode::kParse);
  CHECK(CodeOf([] { LoadCorpus("/nonexistent/corpus.jsonl"); }) == ErrorCode::kIo);
  try {
    Parse("{\"id\":\"a\",\"text\":\"x\"}\n{bad\n");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("vector tables") {
  auto j = nlohmann::json::parse(R"({"d1":{"a":3,"b":4},"d2":{"a":1}})");
  auto table = VectorsFromJson(j);
  CHECK(table.at("d1").at("b") == 4.0);
  CHECK(VectorsToJson(table) == j);
  auto points = ToPoints(table);
  REQUIRE(points.size() == 2);
  CHECK(points[0].doc_id == "d1");
  CHECK(points[0].vector.at("a") == doctest::Approx(0.6));
  CHECK(points[0].vector.at("b") == doctest::Approx(0.8));
  VectorTable zero = {{"z", {{"a", 0.0}}}};
  CHECK(CodeOf([&] { ToPoints(zero); }) == ErrorCode::kEmptyDocument);
  CHECK(CodeOf([] { VectorsFromJson(nlohmann::json::parse(R"({"d":{"a":"x"}})")); }) == ErrorCode::kParse);
  auto fixture = LoadVectors(testing::Fixture("cluster/vectors.json"));
  CHECK_FALSE(fixture.empty());
}

TEST_CASE("enrich options json") {
  EnrichOptions o;
  o.gamma = 0.25;
  o.disambiguate = true;
  o.expansion.max_order = 2;
  o.expansion.tau = 0.1;
  auto back = EnrichOptions::FromJson(o.ToJson());
  CHECK(back.gamma == 0.25);
  CHECK(back.disambiguate);
  CHECK(back.expansion.max_order == 2);
  CHECK(back.expansion.tau == 0.1);
  CHECK(EnrichOptions::FromJson(nlohmann::json::object()).gamma == 0.5);
  CHECK(CodeOf([] { EnrichOptions::FromJson(nlohmann::json{{"gamma", "x"}}); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("enrich the toy corpus") {
  auto net = testing::ToyNetwork();
  auto docs = LoadCorpus(testing::Fixture("toy/corpus.jsonl"));
  EnrichOptions o;
  o.expansion.tau = 0.0;
  auto r = Enrich(docs, net, text::DefaultStopList(), o);
  CHECK(r.order0.size() == docs.size());
  CHECK(r.vectors.size() == docs.size());
  for (const auto& [id, v] : r.vectors) {
    double n = 0.0;
    for (const auto& [k, x] : v) n += x * x;
    CHECK(std::sqrt(n) == doctest::Approx(1.0));
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    for (const auto& f : r.order0[i].features) {
      CHECK(f.order == 0);
      CHECK(std::find(r.expansion.documents[i].features.begin(), r.expansion.documents[i].features.end(), f) !=
            r.expansion.documents[i].features.end());
    }
  }
  auto base = BaselineVectors(r.order0);
  CHECK(base.size() == docs.size());
  auto lines = EnhancedJsonl(docs, r.expansion.documents);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == static_cast<long>(docs.size()));
  CHECK(GoldLabels(docs).at("d1") == "dance");
}

TEST_CASE("single-class corpus is degenerate") {
  auto net = testing::ToyNetwork();
  auto docs = LoadCorpus(testing::Fixture("toy/single_class.jsonl"));
  CHECK(CodeOf([&] { Enrich(docs, net, text::DefaultStopList(), EnrichOptions{}); }) ==
        ErrorCode::kDegenerateLabels);
}

TEST_CASE("baseline of an empty document") {
  std::vector<coset::EnhancedDocument> docs = {{"e", std::nullopt, {}}};
  CHECK(CodeOf([&] { BaselineVectors(docs); }) == ErrorCode::kEmptyDocument);
}

TEST_CASE("synthetic corpus is deterministic") {
  synthetic::SyntheticSpec spec;
  spec.num_docs = 30;
  auto a = synthetic::Generate(spec);
  auto b = synthetic::Generate(spec);
  CHECK(a.triples == b.triples);
  CHECK(a.lexicon == b.lexicon);
  REQUIRE(a.docs.size() == 30);
  for (std::size_t i = 0; i < a.docs.size(); ++i) CHECK(a.docs[i].text == b.docs[i].text);
  spec.seed = 2;
  CHECK(synthetic::Generate(spec).triples != a.triples);
  std::set<std::string> labels;
  for (const auto& d : a.docs) labels.insert(*d.label);
  CHECK(labels.size() == 3);
  auto net = testing::FromText(a.triples, a.lexicon);
  CHECK(net.size() > 0);
}

TEST_CASE("file helpers") {
  auto path = std::filesystem::temp_directory_path() / "semmem_corpus_test.txt";
  WriteFile(path, "abc\n");
  CHECK(ReadFile(path) == "abc\n");
  std::filesystem::remove(path);
  CHECK(CodeOf([] { ReadFile("/nonexistent/x"); }) == ErrorCode::kIo);
}
