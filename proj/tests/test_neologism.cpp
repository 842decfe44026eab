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

#include <cmath>
#include <random>
#include <set>

#include "semmem/error.hpp"
#include "semmem/neologism.hpp"
#include "support.hpp"

using namespace semmem;
using namespace semmem::neo;

namespace {

std::u32string Ctx(std::initializer_list<char32_t> cs) { return std::u32string(cs); }

std::vector<std::string> Words() { return LoadWordList(testing::Fixture("neo/words.txt")); }
std::vector<std::string> Morphemes() { return LoadWordList(testing::Fixture("neo/morphemes.txt")); }

}  // namespace

TEST_CASE("bigram counts on a single word") {
  std::vector<std::string> w = {"ab"};
  auto m = TrainNgram(w, 2, 0.0);
  CHECK(m.Probability(Ctx({U'a'}), U'b') == 1.0);
  CHECK(m.Probability(Ctx({kBegin}), U'a') == 1.0);
  CHECK(m.Probability(Ctx({U'b'}), kEnd) == 1.0);
  CHECK(m.Probability(Ctx({U'z'}), U'a') == 0.0);
  CHECK(m.LogProb("ab") == 0.0);
  CHECK(std::isinf(m.LogProb("ba")));
  CHECK(m.alphabet() == std::set<char32_t>{U'a', U'b', kEnd});
}

TEST_CASE("smoothing gives unseen events mass") {
  std::vector<std::string> w = {"ab"};
  auto m = TrainNgram(w, 2, 0.5);
  const double total = static_cast<double>(m.ContextTotal(Ctx({U'a'})));
  CHECK(m.Probability(Ctx({U'a'}), U'a') == doctest::Approx(0.5 / (total + 0.5 * 3)));
  CHECK(m.Probability(Ctx({U'a'}), U'a') > 0.0);
  CHECK(std::isfinite(m.LogProb("zzz")));
  CHECK(std::isfinite(m.LogProb("bab")));
}

TEST_CASE("smoothed distributions sum to one") {
  auto words = Words();
  auto m = TrainNgram(words, 3, 0.1);
  for (const auto& ctx : {Ctx({kBegin, kBegin}), Ctx({U'n', U'e'}), Ctx({U'q', U'q'})}) {
    double s = 0.0;
    for (char32_t c : m.alphabet()) s += m.Probability(ctx, c);
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("training twice doubles counts, not probabilities") {
  auto words = Words();
  auto once = TrainNgram(words, 3, 0.1);
  std::vector<std::string> twice = words;
  twice.insert(twice.end(), words.begin(), words.end());
  auto doubled = TrainNgram(twice, 3, 0.0);
  auto single = TrainNgram(words, 3, 0.0);
  CHECK(doubled.Count(Ctx({kBegin, kBegin}), U'n') == 2 * single.Count(Ctx({kBegin, kBegin}), U'n'));
  for (const auto& w : words) CHECK(doubled.LogProb(w) == doctest::Approx(single.LogProb(w)).epsilon(1e-14));
  CHECK(once.order() == 3);
}

TEST_CASE("training errors") {
  std::vector<std::string> none;
  std::vector<std::string> w = {"ab"};
  CHECK_THROWS_AS(TrainNgram(none, 2, 0.1), Error);
  CHECK_THROWS_AS(TrainNgram(w, 1, 0.1), Error);
  CHECK_THROWS_AS(TrainNgram(w, 2, -0.1), Error);
}

TEST_CASE("generation enumerates ordered concatenations") {
  auto words = Words();
  auto m = TrainNgram(words, 3, 0.1);
  std::vector<std::string> morphemes = {"net", "mind"};
  auto c = Generate(m, morphemes, 10, 0, words);
  std::set<std::string> got;
  for (const auto& x : c) got.insert(x.word);
  CHECK(got == std::set<std::string>{"mindnet", "netmind"});
  for (const auto& x : c) CHECK(std::isfinite(x.logp));
  std::vector<std::string> one = {"net", "net"};
  CHECK_THROWS_AS(Generate(m, one, 10, 0, words), Error);
  CHECK_THROWS_AS(Generate(m, morphemes, 0, 0, words), Error);
}

TEST_CASE("association counts substring hits") {
  auto words = Words();
  std::vector<std::string> part = {"net"};
  std::size_t oracle = 0;
  for (const auto& w : words) oracle += w.find("net") != std::string::npos;
  CHECK(oracle >= 3);
  CHECK(Association(part, words) == oracle);
  auto m = TrainNgram(words, 3, 0.1);
  std::vector<std::string> morphemes = {"net", "mind"};
  for (const auto& c : Generate(m, morphemes, 10, 0, words)) CHECK(c.assoc >= oracle);
}

TEST_CASE("generation is deterministic and sorted") {
  auto words = Words();
  auto m = TrainNgram(words, 3, 0.1);
  auto morphemes = Morphemes();
  GenerateOptions opts;
  opts.max_enumerate = 50;  // forces sampling
  auto a = Generate(m, morphemes, 20, 9, words, opts);
  auto b = Generate(m, morphemes, 20, 9, words, opts);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].word == b[i].word);
    CHECK(a[i].score == b[i].score);
  }
  auto full = Generate(m, morphemes, 1000, 0, words);
  for (std::size_t i = 1; i < full.size(); ++i) {
    CHECK((full[i - 1].score > full[i].score ||
           (full[i - 1].score == full[i].score && full[i - 1].word < full[i].word)));
  }
}

TEST_CASE("score is increasing in logp at fixed association") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-6.0, -0.5);
  std::vector<Candidate> batch(1000);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    batch[i].word = "w" + std::to_string(i);
    batch[i].logp = u(rng);
    batch[i].assoc = rng() % 6;
  }
  ScoreBatch(batch, 0.5);
  long violations = 0;
  for (const auto& a : batch) {
    for (const auto& b : batch) {
      if (a.assoc == b.assoc && a.logp > b.logp && !(a.score > b.score)) ++violations;
      if (a.assoc >= b.assoc && a.logp >= b.logp && a.score < b.score) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("score scaling edge cases") {
  std::vector<Candidate> batch = {{"a", {}, -1.0, 2, 0}, {"b", {}, -1.0, 2, 0},
                                  {"c", {}, -std::numeric_limits<double>::infinity(), 5, 0}};
  ScoreBatch(batch, 0.5);
  CHECK(batch[0].score == 0.0);
  CHECK(std::isinf(batch[2].score));
  CHECK(ToJson(batch[2])["logp"].is_null());
}

TEST_CASE("novelty filter") {
  std::set<std::string> lex = {"network"};
  std::vector<Candidate> c = {{"network", {}, 0, 0, 0}, {"netmind", {}, 0, 0, 0}};
  auto f = FilterNovel(c, lex);
  REQUIRE(f.size() == 1);
  CHECK(f[0].word == "netmind");
  CHECK(FilterNovel({}, lex).empty());
  std::vector<Candidate> novel = {{"b", {}, 0, 0, 0}, {"a", {}, 0, 0, 0}};
  auto g = FilterNovel(novel, lex);
  CHECK(g.size() == 2);
  CHECK(g[0].word == "b");
}

TEST_CASE("word list loading") {
  auto words = Words();
  CHECK(words.size() == 30);
  CHECK_THROWS_AS(LoadWordList("/nonexistent/words.txt"), Error);
}
