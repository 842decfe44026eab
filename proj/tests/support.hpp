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

#ifndef SEMMEM_TESTS_SUPPORT_HPP_
#define SEMMEM_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "semmem/ontology.hpp"

namespace semmem::testing {

inline std::filesystem::path Fixture(const std::string& relative) {
  return std::filesystem::path(SEMMEM_FIXTURES) / relative;
}

inline SemanticNetwork ToyNetwork() {
  return SemanticNetwork::Ingest(Fixture("toy/triples.tsv"), Fixture("toy/lexicon.jsonl"));
}

inline SemanticNetwork FromText(const std::string& triples, const std::string& lexicon,
                                const IngestOptions& options = {}) {
  std::istringstream t(triples);
  std::istringstream l(lexicon);
  return SemanticNetwork::FromStreams(t, l, options);
}

struct RandomGraphSpec {
  int min_concepts = 4;
  int max_concepts = 12;
  double edge_probability = 0.3;
  double inhibitory_probability = 0.15;
  int max_senses = 3;  // concepts sharing one surface form
};

struct RandomGraph {
  std::string triples;
  std::string lexicon;
  std::vector<std::string> ids;
  // surface -> concepts carrying it
  std::map<std::string, std::vector<std::string>> surfaces;
};

// Concept ids c00, c01, ...; surfaces w0, w1, ... shared by up to
// max_senses concepts; random weighted edges with some inhibitory ones.
inline RandomGraph MakeRandomGraph(std::uint64_t seed, const RandomGraphSpec& spec = {}) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = spec.min_concepts +
                static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_concepts - spec.min_concepts + 1));
  RandomGraph g;
  for (int i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "c%02d", i);
    g.ids.emplace_back(buf);
  }
  int next = 0;
  int surface = 0;
  while (next < n) {
    int senses = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.max_senses));
    std::string s = "w" + std::to_string(surface++);
    for (int k = 0; k < senses && next < n; ++k) g.surfaces[s].push_back(g.ids[next++]);
  }
  std::ostringstream lex;
  for (const auto& [s, ids] : g.surfaces) {
    for (const auto& id : ids) lex << "{\"id\":\"" << id << "\",\"name\":\"" << s << "\"}\n";
  }
  g.lexicon = lex.str();
  std::ostringstream tri;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || unit(rng) >= spec.edge_probability) continue;
      double w = 0.1 + 0.9 * unit(rng);
      const char* pol = unit(rng) < spec.inhibitory_probability ? "-" : "+";
      tri << g.ids[i] << "\trel" << (rng() % 3) << "\t" << g.ids[j] << "\t" << w << "\t" << pol << "\n";
    }
  }
  g.triples = tri.str();
  return g;
}

}  // namespace semmem::testing

#endif  // SEMMEM_TESTS_SUPPORT_HPP_
