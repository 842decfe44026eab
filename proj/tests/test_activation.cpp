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

#include "semmem/activation.hpp"
#include "semmem/error.hpp"
#include "semmem/parallel.hpp"
#include "semmem/reference.hpp"
#include "support.hpp"

using namespace semmem;
using activation::ActivationConfig;

namespace {

SemanticNetwork Pair() {
  return testing::FromText("a\tr\tb\t1.0\n", "{\"id\":\"a\"}\n{\"id\":\"b\"}\n");
}

ActivationConfig Cfg(double d, double g, double theta) {
  ActivationConfig cfg;
  cfg.decay = d;
  cfg.gain = g;
  cfg.threshold = theta;
  return cfg;
}

}  // namespace

TEST_CASE("one step along a single edge") {
  auto net = Pair();
  auto cfg = Cfg(0.5, 0.5, 0.0);
  cfg.max_iter = 1;
  auto s = activation::Propagate(net, {{"a", 1.0}}, cfg);
  CHECK(s.iteration == 1);
  CHECK(s.values[net.Require("a")] == 0.5);
  CHECK(s.values[net.Require("b")] == 0.5);
}

TEST_CASE("isolated node decays geometrically to zero") {
  auto net = testing::FromText("", "{\"id\":\"a\"}\n");
  auto cfg = Cfg(0.5, 0.6, 0.01);
  std::vector<double> trace;
  auto s = activation::Propagate(net, {{"a", 1.0}}, cfg,
                                 [&](int, std::span<const double> v) { trace.push_back(v[0]); });
  CHECK(s.converged);
  CHECK(s.values[0] == 0.0);
  double expect = 1.0;
  for (std::size_t t = 0; t < trace.size(); ++t) {
    expect *= 0.5;
    if (expect < 0.01) expect = 0.0;
    CHECK(trace[t] == expect);
  }
  CHECK(trace.size() == 8);  // 0.5^7 = 0.0078 is zeroed, step 8 sees no change
}

TEST_CASE("empty seeds converge at once") {
  auto net = testing::ToyNetwork();
  auto s = activation::Propagate(net, {}, ActivationConfig{});
  CHECK(s.converged);
  CHECK(s.iteration == 1);
  for (double v : s.values) CHECK(v == 0.0);
}

TEST_CASE("seed validation") {
  auto net = Pair();
  ActivationConfig cfg;
  CHECK_THROWS_AS(activation::Propagate(net, {{"zz", 1.0}}, cfg), Error);
  try {
    activation::Propagate(net, {{"a", 1.5}}, cfg);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
  try {
    activation::Propagate(net, {{"zz", 1.0}}, cfg);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotFound);
  }
  CHECK_THROWS_AS(activation::Propagate(net, {{"a", 0.0}}, cfg), Error);
}

TEST_CASE("config validation and json") {
  ActivationConfig bad;
  bad.decay = 1.5;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = ActivationConfig{};
  bad.gain = -1;
  CHECK_THROWS_AS(bad.Validate(), Error);
  bad = ActivationConfig{};
  bad.max_iter = 0;
  CHECK_THROWS_AS(bad.Validate(), Error);
  ActivationConfig c = Cfg(0.3, 0.2, 0.05);
  c.sustain_seeds = true;
  auto back = ActivationConfig::FromJson(c.ToJson());
  CHECK(back.decay == 0.3);
  CHECK(back.gain == 0.2);
  CHECK(back.threshold == 0.05);
  CHECK(back.sustain_seeds);
  CHECK(ActivationConfig::FromJson(nlohmann::json::object()).decay == ActivationConfig{}.decay);
  CHECK_THROWS_AS(ActivationConfig::FromJson(nlohmann::json::array()), Error);
}

TEST_CASE("inhibitory edges lower activation") {
  auto net = testing::FromText("a\tr\tc\t1.0\t+\nb\tr\tc\t1.0\t-\n",
                               "{\"id\":\"a\"}\n{\"id\":\"b\"}\n{\"id\":\"c\"}\n");
  auto cfg = Cfg(0.5, 0.5, 0.0);
  cfg.max_iter = 1;
  auto only_a = activation::Propagate(net, {{"a", 1.0}}, cfg);
  auto both = activation::Propagate(net, {{"a", 1.0}, {"b", 1.0}}, cfg);
  CHECK(both.values[2] < only_a.values[2]);
  CHECK(both.values[2] == 0.0);
}

TEST_CASE("sustained seeds hold an isolated node at its seed") {
  auto net = testing::FromText("", "{\"id\":\"a\"}\n");
  auto cfg = Cfg(0.5, 0.6, 0.01);
  cfg.sustain_seeds = true;
  auto s = activation::Propagate(net, {{"a", 0.4}}, cfg);
  CHECK(s.converged);
  CHECK(s.values[0] == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("snapshot and overlap") {
  auto net = Pair();
  activation::ActivationState st;
  st.values = {0.5, 0.0};
  auto v = activation::Snapshot(net, st);
  CHECK(v == activation::ActivationVector{{"a", 0.5}});
  st.values = {0.0, 0.0};
  CHECK(activation::Snapshot(net, st).empty());

  CHECK(activation::Overlap({{"a", 1.0}}, {{"a", 1.0}}) == 1.0);
  CHECK(activation::Overlap({{"a", 1.0}}, {{"b", 1.0}}) == 0.0);
  CHECK(activation::Overlap({{"a", 0.5}, {"b", 0.5}}, {{"a", 0.5}}) == 0.25);
}

TEST_CASE("snapshot re-seeded under the identity update is unchanged") {
  auto net = testing::ToyNetwork();
  auto s = activation::Propagate(net, {{"kick", 1.0}, {"goal", 0.6}}, ActivationConfig{});
  auto snap = activation::Snapshot(net, s);
  auto cfg = Cfg(1.0, 0.0, 0.0);
  auto again = activation::Propagate(net, snap, cfg);
  CHECK(again.converged);
  CHECK(activation::Snapshot(net, again) == snap);
}

TEST_CASE("winner takes most") {
  auto net = testing::FromText("", "{\"id\":\"s1\"}\n{\"id\":\"s2\"}\n");
  activation::ActivationState st;
  st.values = {0.8, 0.3};
  auto w = activation::WinnerTakeMost(net, st, {"s1", "s2"}, 0.0);
  CHECK(w.values == std::vector<double>{0.8, 0.0});
  st.values = {0.5, 0.5};
  w = activation::WinnerTakeMost(net, st, {"s1", "s2"}, 0.0);
  CHECK(w.values == std::vector<double>{0.5, 0.0});
  st.values = {0.2, 0.7};
  w = activation::WinnerTakeMost(net, st, {"s1", "s2"}, 1.0);
  CHECK(w.values == st.values);
  w = activation::WinnerTakeMost(net, st, {"s1", "s2"}, 0.5);
  CHECK(w.values == std::vector<double>{0.1, 0.7});
  CHECK_THROWS_AS(activation::WinnerTakeMost(net, st, {}, 0.0), Error);
  CHECK_THROWS_AS(activation::WinnerTakeMost(net, st, {"s1"}, 1.5), Error);
}

TEST_CASE("vector json round trip") {
  activation::ActivationVector v = {{"a", 0.25}, {"b", 1.0}};
  CHECK(activation::VectorFromJson(activation::VectorToJson(v)) == v);
  CHECK(activation::VectorFromJson(nlohmann::json{{"a", 0.0}}).empty());
  CHECK_THROWS_AS(activation::VectorFromJson(nlohmann::json{{"a", "x"}}), Error);
}

TEST_CASE("random graphs stay bounded and match the serial reference") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = testing::MakeRandomGraph(seed);
    auto net = testing::FromText(g.triples, g.lexicon);
    std::map<ConceptId, double> seeds = {{g.ids[0], 1.0}, {g.ids.back(), 0.5}};
    for (bool sustain : {false, true}) {
      ActivationConfig cfg;
      cfg.sustain_seeds = sustain;
      auto fast = activation::Propagate(net, seeds, cfg, [&](int, std::span<const double> v) {
        for (double x : v) {
          REQUIRE(std::isfinite(x));
          REQUIRE(x >= 0.0);
          REQUIRE(x <= cfg.a_max);
        }
      });
      auto slow = reference::Propagate(net, seeds, cfg);
      CHECK(fast.values == slow.values);
      CHECK(fast.iteration == slow.iteration);
      CHECK(fast.converged == slow.converged);
    }
  }
}
