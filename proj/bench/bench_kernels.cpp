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


// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "semmem/activation.hpp"
#include "semmem/cluster.hpp"
#include "semmem/reference.hpp"
#include "semmem/synthetic.hpp"
#include "semmem/wsd.hpp"

namespace {

semmem::SemanticNetwork RandomNetwork(int n, int edges_per_node, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::ostringstream lex, tri;
  for (int i = 0; i < n; ++i) {
    lex << "{\"surface\":\"w" << i << "\",\"concept\":\"c" << i << "\",\"is_collocation\":false}\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < edges_per_node; ++e) {
      int j = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (j == i) continue;
      tri << "c" << i << "\trel\tc" << j << "\t" << 0.1 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0
          << (rng() % 5 == 0 ? "\tinhibitory" : "") << "\n";
    }
  }
  std::istringstream t(tri.str()), l(lex.str());
  return semmem::SemanticNetwork::FromStreams(t, l);
}

std::map<semmem::ConceptId, double> Seeds(int n) {
  std::map<semmem::ConceptId, double> seeds;
  for (int i = 0; i < n; i += 97) seeds["c" + std::to_string(i)] = 1.0;
  return seeds;
}

void BM_Propagate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto net = RandomNetwork(n, 8, 7);
  semmem::activation::ActivationConfig cfg;
  const auto seeds = Seeds(n);
  for (auto _ : state) benchmark::DoNotOptimize(semmem::activation::Propagate(net, seeds, cfg));
}
BENCHMARK(BM_Propagate)->Arg(2000)->Arg(20000);

void BM_PropagateReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto net = RandomNetwork(n, 8, 7);
  semmem::activation::ActivationConfig cfg;
  const auto seeds = Seeds(n);
  for (auto _ : state) benchmark::DoNotOptimize(semmem::reference::Propagate(net, seeds, cfg));
}
BENCHMARK(BM_PropagateReference)->Arg(2000)->Arg(20000);

std::vector<semmem::cluster::SparseVector> RandomVectors(int n, int dims, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<semmem::cluster::SparseVector> out(static_cast<std::size_t>(n));
  for (auto& v : out) {
    double norm = 0.0;
    for (int k = 0; k < 20; ++k) {
      double x = static_cast<double>(rng() % 1000 + 1);
      v["f" + std::to_string(rng() % static_cast<unsigned>(dims))] += x;
    }
    for (auto& [key, x] : v) norm += x * x;
    for (auto& [key, x] : v) x /= std::sqrt(norm);
  }
  return out;
}

void BM_Distances(benchmark::State& state) {
  const auto vectors = RandomVectors(static_cast<int>(state.range(0)), 500, 3);
  for (auto _ : state) benchmark::DoNotOptimize(semmem::cluster::CosineDistances(vectors));
}
BENCHMARK(BM_Distances)->Arg(200)->Arg(800);

void BM_DistancesReference(benchmark::State& state) {
  const auto vectors = RandomVectors(static_cast<int>(state.range(0)), 500, 3);
  for (auto _ : state) benchmark::DoNotOptimize(semmem::reference::CosineDistances(vectors));
}
BENCHMARK(BM_DistancesReference)->Arg(200)->Arg(800);

struct CountsFixture {
  semmem::SemanticNetwork net;
  semmem::wsd::SynsetInventory synsets;
  std::vector<std::string> texts;

  CountsFixture() {
    semmem::synthetic::SyntheticSpec spec;
    spec.num_docs = 600;
    const auto corpus = semmem::synthetic::Generate(spec);
    std::istringstream t(corpus.triples), l(corpus.lexicon);
    net = semmem::SemanticNetwork::FromStreams(t, l);
    std::vector<semmem::wsd::Synset> sets;
    for (int c = 0; c < spec.num_classes; ++c) {
      for (int m = 0; m < spec.mids_per_class; ++m) {
        std::string mid = "c" + std::to_string(c) + "/mid" + std::to_string(m);
        sets.push_back({"s" + std::to_string(c) + "_" + std::to_string(m), {mid}, std::nullopt});
      }
    }
    for (int i = 0; i < spec.noise_pool; ++i) sets.push_back({"n" + std::to_string(i), {"noise" + std::to_string(i)}, {}});
    synsets = semmem::wsd::SynsetInventory(sets, net);
    for (const auto& d : corpus.docs) texts.push_back(d.text);
  }
};

void BM_ReferenceCounts(benchmark::State& state) {
  static const CountsFixture f;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        semmem::wsd::BuildReferenceCounts(f.texts, f.synsets, f.net, semmem::text::DefaultStopList()));
  }
}
BENCHMARK(BM_ReferenceCounts);

void BM_ReferenceCountsReference(benchmark::State& state) {
  static const CountsFixture f;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        semmem::reference::BuildReferenceCounts(f.texts, f.synsets, f.net, semmem::text::DefaultStopList()));
  }
}
BENCHMARK(BM_ReferenceCountsReference);

}  // namespace

BENCHMARK_MAIN();
