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

// Acceptance criteria AC1-AC10. Prints one PASS/FAIL line per criterion
// and exits non-zero when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "oracles.hpp"
#include "semmem/activation.hpp"
#include "semmem/cluster.hpp"
#include "semmem/corpus_io.hpp"
#include "semmem/coset.hpp"
#include "semmem/mds.hpp"
#include "semmem/neologism.hpp"
#include "semmem/parallel.hpp"
#include "semmem/query_game.hpp"
#include "semmem/reference.hpp"
#include "semmem/service.hpp"
#include "semmem/session_log.hpp"
#include "semmem/synthetic.hpp"
#include "semmem/wsd.hpp"
#include "support.hpp"

using namespace semmem;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

std::string Fmt(double x, int digits = 4) {
  std::ostringstream ss;
  ss.precision(digits);
  ss << x;
  return ss.str();
}

double ClusterPurity(const corpus::VectorTable& vectors, const std::map<std::string, std::string>& gold, int k) {
  const auto points = corpus::ToPoints(vectors);
  return *cluster::ClusterDocuments(points, k, &gold).purity;
}

// Enrichment against the order-0 baseline on seeded synthetic corpora.
Outcome Ac1() {
  Outcome o;
  const auto start = Clock::now();
  double worst_margin = 1e9;
  double worst_enhanced = 1e9;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    synthetic::SyntheticSpec spec;
    spec.seed = seed;
    const auto corpus = synthetic::Generate(spec);
    const auto net = testing::FromText(corpus.triples, corpus.lexicon);
    corpus::EnrichOptions options;
    options.expansion.max_order = 2;
    // At the default attenuation of 0.5 the unique order-0 leaves outweigh
    // the shared class concepts two levels up.
    options.gamma = 0.75;
    const auto r = corpus::Enrich(corpus.docs, net, text::DefaultStopList(), options);
    const auto gold = corpus::GoldLabels(corpus.docs);
    const double enhanced = ClusterPurity(r.vectors, gold, spec.num_classes);
    const double baseline = ClusterPurity(corpus::BaselineVectors(r.order0), gold, spec.num_classes);
    worst_margin = std::min(worst_margin, enhanced - baseline);
    worst_enhanced = std::min(worst_enhanced, enhanced);
    if (enhanced < baseline + 0.15 || enhanced < 0.90) {
      o.pass = false;
      o.detail += " seed " + std::to_string(seed) + ": enhanced " + Fmt(enhanced) + " baseline " + Fmt(baseline) + ";";
    }
  }
  const double secs = Seconds(start);
  if (secs >= 60.0) o.pass = false;
  o.detail += " min enhanced " + Fmt(worst_enhanced) + ", min margin " + Fmt(worst_margin) + ", " + Fmt(secs, 3) + " s";
  return o;
}

coset::EnhancedDocument Doc(std::string id, std::string label, const std::vector<std::string>& concepts) {
  coset::EnhancedDocument d{std::move(id), std::move(label), {}};
  for (const auto& c : concepts) d.features.push_back(coset::Feature{c, 0, 1.0});
  return d;
}

// Order-0 features are never pruned.
Outcome Ac2() {
  Outcome o;
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = testing::MakeRandomGraph(seed + 1000);
    const auto net = testing::FromText(g.triples, g.lexicon);
    std::mt19937_64 rng(seed);
    std::vector<coset::EnhancedDocument> docs;
    const int n = 4 + static_cast<int>(rng() % 12);
    const int labels = 2 + static_cast<int>(rng() % 3);
    for (int d = 0; d < n; ++d) {
      std::vector<std::string> f;
      const int m = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < m; ++k) f.push_back(g.ids[rng() % g.ids.size()]);
      docs.push_back(Doc("d" + std::to_string(d), "L" + std::to_string(d % labels), f));
    }
    coset::ExpansionConfig cfg;
    cfg.max_order = 1 + static_cast<int>(rng() % 3);
    const double taus[] = {0.0, 0.01, 0.1, 0.5, 1.0, 1e9};
    if (rng() % 4 != 0) cfg.tau = taus[rng() % 6];
    cfg.top_k = 1 + rng() % 5;
    cfg.metric = rng() % 2 ? coset::RankingMetric::kInformationGain : coset::RankingMetric::kChiSquare;
    const auto r = coset::IterateExpansion(docs, net, cfg);
    for (std::size_t i = 0; i < docs.size(); ++i) {
      for (const auto& f : docs[i].features) {
        const auto& out = r.documents[i].features;
        const bool kept = std::any_of(out.begin(), out.end(), [&](const coset::Feature& x) {
          return x.order == 0 && x.concept_id == f.concept_id;
        });
        if (!kept || !r.selected.contains(f.concept_id)) ++violations;
      }
    }
  }
  o.pass = violations == 0;
  o.detail = " 50 configurations, " + std::to_string(violations) + " violations";
  return o;
}

// Closed-form decay, boundedness, convergence and thread independence.
Outcome Ac3() {
  Outcome o;
  {
    const auto net = testing::FromText("", "{\"id\":\"a\"}\n");
    activation::ActivationConfig cfg;
    cfg.decay = 0.5;
    cfg.threshold = 0.0;
    cfg.max_iter = 40;
    std::vector<double> trace;
    activation::Propagate(net, {{"a", 1.0}}, cfg, [&](int, std::span<const double> v) { trace.push_back(v[0]); });
    for (std::size_t t = 0; t < trace.size(); ++t) {
      if (trace[t] != std::ldexp(1.0, -static_cast<int>(t + 1))) {
        o.pass = false;
        o.detail += " decay step " + std::to_string(t + 1) + " inexact;";
      }
    }
  }
  int unbounded = 0;
  int unconverged = 0;
  int thread_mismatch = 0;
  int max_iter = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = testing::MakeRandomGraph(seed + 2000);
    const auto net = testing::FromText(g.triples, g.lexicon);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::map<ConceptId, double> seeds;
    for (const auto& id : g.ids) {
      if (rng() % 3 == 0) seeds[id] = u(rng);
    }
    if (seeds.empty()) seeds[g.ids[0]] = 1.0;
    for (bool sustain : {false, true}) {
      activation::ActivationConfig cfg;
      cfg.sustain_seeds = sustain;
      activation::ActivationState serial;
      {
        parallel::ScopedThreads t(1);
        serial = activation::Propagate(net, seeds, cfg, [&](int, std::span<const double> v) {
          for (double x : v) {
            if (!(x >= 0.0 && x <= cfg.a_max)) ++unbounded;
          }
        });
      }
      if (!serial.converged) ++unconverged;
      max_iter = std::max(max_iter, serial.iteration);
      parallel::ScopedThreads t(4);
      const auto threaded = activation::Propagate(net, seeds, cfg);
      if (serial.values.size() != threaded.values.size() ||
          std::memcmp(serial.values.data(), threaded.values.data(), serial.values.size() * sizeof(double)) != 0) {
        ++thread_mismatch;
      }
    }
  }
  if (unbounded || unconverged || thread_mismatch) o.pass = false;
  o.detail += " 100 graphs: " + std::to_string(unbounded) + " out of bounds, " + std::to_string(unconverged) +
              " unconverged (max " + std::to_string(max_iter) + " iterations), " + std::to_string(thread_mismatch) +
              " thread mismatches";
  return o;
}

// Activation-based sense choice equals the exhaustive search.
Outcome Ac4() {
  Outcome o;
  int agree = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = testing::MakeRandomGraph(seed + 3000);
    const auto net = testing::FromText(g.triples, g.lexicon);
    std::mt19937_64 rng(seed);
    std::vector<std::string> surfaces;
    for (const auto& [s, ids] : g.surfaces) surfaces.push_back(s);
    std::vector<text::ConceptMention> ms;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      text::ConceptMention m;
      m.matched_surface = surfaces[rng() % surfaces.size()];
      m.candidates = g.surfaces.at(m.matched_surface);
      ms.push_back(m);
    }
    const auto got = wsd::DisambiguateActivation(ms, net, {});
    std::vector<ConceptId> chosen;
    for (const auto& c : got.chosen) chosen.push_back(c.concept_id);
    if (chosen == oracle::BruteForceSenses(ms, net, {})) ++agree;
  }
  o.pass = agree == 200;
  o.detail = " " + std::to_string(agree) + "/200 agree";
  return o;
}

std::vector<std::string> ReadLines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

// Reference-corpus synset counts.
Outcome Ac5() {
  Outcome o;
  const auto net = testing::ToyNetwork();
  const auto inv = wsd::SynsetInventory::Load(testing::Fixture("toy/synsets.jsonl"), net);
  const auto ref = ReadLines(testing::Fixture("toy/reference.txt"));
  const auto t = wsd::BuildReferenceCounts(ref, inv, net, text::DefaultStopList());
  const std::map<std::string, long> hand = {{"s_depository", 2}, {"s_money", 3}, {"s_river_bank", 4}, {"s_water", 3}};
  for (const auto& [id, n] : hand) {
    if (t.counts.at(id) != n) {
      o.pass = false;
      o.detail += " " + id + " counted " + std::to_string(t.counts.at(id)) + ";";
    }
  }
  auto doubled = ref;
  doubled.insert(doubled.end(), ref.begin(), ref.end());
  const auto t2 = wsd::BuildReferenceCounts(doubled, inv, net, text::DefaultStopList());
  for (const auto& [id, n] : t.counts) {
    if (t2.counts.at(id) != 2 * n) {
      o.pass = false;
      o.detail += " doubling changed " + id + ";";
    }
  }
  o.detail += " " + std::to_string(hand.size()) + " hand counts, doubling checked over " +
              std::to_string(t.counts.size()) + " synsets";
  return o;
}

game::KnowledgeMatrix Matrix(const std::vector<std::vector<double>>& rows) {
  std::vector<ConceptId> concepts;
  std::vector<game::FeatureInfo> features;
  for (std::size_t i = 0; i < rows.size(); ++i) concepts.push_back("c" + std::to_string(i));
  for (std::size_t f = 0; f < rows[0].size(); ++f) features.push_back({"f" + std::to_string(f), "q"});
  return game::KnowledgeMatrix(concepts, features, rows);
}

game::KnowledgeMatrix BinaryCode(int k, int copies) {
  std::vector<std::vector<double>> rows;
  for (int c = 0; c < (1 << k); ++c) {
    std::vector<double> row;
    for (int r = 0; r < copies; ++r) {
      for (int j = 0; j < k; ++j) row.push_back((c >> j) & 1);
    }
    rows.push_back(row);
  }
  return Matrix(rows);
}

// Twenty questions: exact binary search, noisy accuracy, gain oracle.
Outcome Ac6() {
  Outcome o;
  int binary_failures = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int k = 1 + static_cast<int>(seed % 6);
    const auto kb = BinaryCode(k, 1);
    std::mt19937_64 rng(seed);
    const std::size_t target = rng() % kb.num_concepts();
    game::SessionConfig cfg;
    cfg.guess_threshold = 1.0;
    const auto r = game::RunSession(kb, game::SimulatedOracle(kb, target, 0.0, seed), cfg);
    if (r.guess != kb.concept_id(target) || r.questions > static_cast<std::size_t>(k)) ++binary_failures;
  }
  // 16 concepts, each of the 4 code bits asked through 5 redundant features.
  const auto noisy = BinaryCode(4, 5);
  int correct = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t target = seed % noisy.num_concepts();
    game::SessionConfig cfg;
    cfg.epsilon = 0.1;
    cfg.guess_threshold = 0.99;
    cfg.budget = 20;
    const auto r = game::RunSession(noisy, game::SimulatedOracle(noisy, target, 0.1, seed), cfg);
    if (r.guess == noisy.concept_id(target) && r.questions <= 20) ++correct;
  }
  const double accuracy = correct / 500.0;
  double worst_gain = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const std::size_t nc = 1 + rng() % 12;
    const std::size_t nf = 1 + rng() % 12;
    std::vector<std::vector<double>> rows(nc, std::vector<double>(nf));
    for (auto& row : rows) {
      for (auto& x : row) x = seed % 2 ? static_cast<double>(rng() % 2) : u(rng);
    }
    const auto kb = Matrix(rows);
    std::vector<double> masses(nc);
    for (auto& m : masses) m = u(rng);
    const double eps = static_cast<double>(seed % 3) * 0.1;
    for (std::size_t f = 0; f < nf; ++f) {
      worst_gain = std::max(worst_gain, std::abs(game::ExpectedGain(masses, kb, f, eps) -
                                                 oracle::GainByEnumeration(masses, kb, f, eps)));
    }
  }
  o.pass = binary_failures == 0 && accuracy >= 0.90 - 0.03 && worst_gain <= 1e-12;
  o.detail = " binary failures " + std::to_string(binary_failures) + "/100, noisy accuracy " + Fmt(accuracy) +
             ", max gain error " + Fmt(worst_gain, 3);
  return o;
}

// Classical MDS reproduces planar distances.
Outcome Ac7() {
  Outcome o;
  double worst = 0.0;
  double slowest = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed + 4000);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    const std::size_t n = 3 + rng() % 48;
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts) p = {u(rng), u(rng)};
    cluster::DistanceMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        d.Set(i, j, std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second));
      }
    }
    const auto start = Clock::now();
    const auto e = mds::ClassicalMds(d, 2);
    slowest = std::max(slowest, Seconds(start));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double got = std::hypot(e.at(i, 0) - e.at(j, 0), e.at(i, 1) - e.at(j, 1));
        if (d(i, j) > 0.0) worst = std::max(worst, std::abs(got - d(i, j)) / d(i, j));
      }
    }
  }
  o.pass = worst <= 1e-6 && slowest < 1.0;
  o.detail = " max relative error " + Fmt(worst, 3) + ", slowest " + Fmt(slowest, 3) + " s";
  return o;
}

// Information gain against the entropy oracle.
Outcome Ac8() {
  Outcome o;
  double worst = 0.0;
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto docs = oracle::RandomCorpus(seed + 5000, 20);
    const auto ig = coset::RankFeatures(docs, coset::RankingMetric::kInformationGain);
    for (const auto& [id, v] : ig) {
      worst = std::max(worst, std::abs(v - oracle::InformationGain(docs, id)));
      ++checked;
    }
  }
  o.pass = worst <= 1e-12;
  o.detail = " " + std::to_string(checked) + " features over 500 corpora, max error " + Fmt(worst, 3);
  return o;
}

// Neologism novelty and score monotonicity.
Outcome Ac9() {
  Outcome o;
  const auto words = neo::LoadWordList(testing::Fixture("neo/words.txt"));
  const auto morphemes = neo::LoadWordList(testing::Fixture("neo/morphemes.txt"));
  const auto model = neo::TrainNgram(words, 3, 0.1);
  const std::set<std::string> lexicon(words.begin(), words.end());
  std::size_t emitted = 0;
  int known = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    neo::GenerateOptions go;
    go.max_enumerate = seed == 0 ? 20000 : 60;
    const auto out = neo::FilterNovel(neo::Generate(model, morphemes, 100, seed, words, go), lexicon);
    emitted += out.size();
    for (const auto& c : out) known += lexicon.contains(c.word);
  }
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-8.0, -0.1);
  std::vector<neo::Candidate> batch(1000);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    batch[i].word = "x" + std::to_string(i);
    batch[i].logp = u(rng);
    batch[i].assoc = rng() % 8;
  }
  neo::ScoreBatch(batch, 0.5);
  long violations = 0;
  for (const auto& a : batch) {
    for (const auto& b : batch) {
      if (a.assoc == b.assoc && a.logp > b.logp && !(a.score > b.score)) ++violations;
    }
  }
  o.pass = known == 0 && emitted > 0 && violations == 0;
  o.detail = " " + std::to_string(known) + "/" + std::to_string(emitted) + " outputs in lexicon, " +
             std::to_string(violations) + " monotonicity violations";
  return o;
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("semmem_acc_" + name + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

service::ServiceConfig ToyService(const fs::path& data) {
  service::ServiceConfig c;
  c.triples = testing::Fixture("toy/triples.tsv");
  c.lexicon = testing::Fixture("toy/lexicon.jsonl");
  c.synsets = testing::Fixture("toy/synsets.jsonl");
  c.reference = testing::Fixture("toy/reference.txt");
  c.knowledge = testing::Fixture("game/animals.json");
  c.data_dir = data;
  c.session_seed = 3;
  return c;
}

bool SameSession(const nlohmann::json& live, const nlohmann::json& replayed) {
  for (const char* key : {"state", "question", "guess", "budget", "knowledge_version"}) {
    if (live.at(key) != replayed.at(key)) return false;
  }
  const auto& a = live.at("transcript");
  const auto& b = replayed.at("transcript");
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].at("feature") != b[i].at("feature") || a[i].at("answer") != b[i].at("answer")) return false;
  }
  const auto& p = live.at("posterior_top");
  const auto& q = replayed.at("posterior_top");
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].at("concept") != q[i].at("concept")) return false;
    if (std::abs(p[i].at("p").get<double>() - q[i].at("p").get<double>()) > 1e-12) return false;
  }
  return true;
}

// Session replay and the HTTP contract.
Outcome Ac10() {
  Outcome o;
  TempDir dir("service");
  int replay_failures = 0;
  {
    service::Service svc(ToyService(dir.path / "replay"));
    std::mt19937_64 rng(10);
    const char* answers[] = {"yes", "no", "unknown"};
    for (int s = 0; s < 50; ++s) {
      const std::string cfg = s % 2 ? R"({"config":{"epsilon":0.1}})" : "{}";
      auto r = svc.Handle("POST", "/v1/sessions", cfg);
      const std::string id = r.body.at("session_id");
      const int steps = static_cast<int>(rng() % 7);
      for (int q = 0; q < steps && r.body.at("state") == "asking"; ++q) {
        r = svc.Handle("POST", "/v1/sessions/" + id + "/answer",
                       nlohmann::json{{"answer", answers[rng() % 3]}}.dump());
      }
      if (s % 7 == 0 && r.body.at("state") != "done") {
        r = svc.Handle("POST", "/v1/sessions/" + id + "/teach",
                       nlohmann::json{{"concept", "new" + std::to_string(s)}, {"facts", {{"mammal", 1}}}}.dump());
      }
      // A second service over the same data directory rebuilds the session
      // from its log alone.
      service::Service fresh(ToyService(dir.path / "replay"));
      const auto replayed = service::Replay(service::ReadEvents(svc.SessionLogPath(id)), fresh.knowledge());
      if (!SameSession(r.body, replayed.ToJson())) ++replay_failures;
    }
  }
  int contract_failures = 0;
  std::size_t contract_cases = 0;
  {
    service::Service svc(ToyService(dir.path / "contract"));
    std::string session;
    for (const auto& line : ReadLines(testing::Fixture("api/contract.jsonl"))) {
      const auto c = nlohmann::json::parse(line);
      std::string path = c.at("path");
      if (auto at = path.find("{session}"); at != std::string::npos) path.replace(at, 9, session);
      const auto r = svc.Handle(c.at("method"), path, c.value("body", ""));
      ++contract_cases;
      bool ok = r.status == c.at("status").get<int>();
      for (const auto& k : c.at("keys")) ok = ok && r.body.contains(k.get<std::string>());
      if (c.contains("code")) ok = ok && r.body.value("code", "") == c.at("code");
      if (!ok) {
        ++contract_failures;
        o.detail += " " + c.at("method").get<std::string>() + " " + path + " -> " + std::to_string(r.status) + ";";
      }
      if (r.status == 201) session = r.body.at("session_id");
    }
  }
  o.pass = replay_failures == 0 && contract_failures == 0;
  o.detail += " replay mismatches " + std::to_string(replay_failures) + "/50, contract failures " +
              std::to_string(contract_failures) + "/" + std::to_string(contract_cases);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", Ac1}, {"AC2", Ac2}, {"AC3", Ac3}, {"AC4", Ac4}, {"AC5", Ac5},
      {"AC6", Ac6}, {"AC7", Ac7}, {"AC8", Ac8}, {"AC9", Ac9}, {"AC10", Ac10}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string(" exception: ") + e.what();
    }
    std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << o.detail << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
