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

#ifndef SEMMEM_COSET_HPP_
#define SEMMEM_COSET_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "semmem/ontology.hpp"
#include "semmem/text_pipeline.hpp"

namespace semmem::coset {

struct CosetMember {
  ConceptId id;
  std::string relation_type;
  double weight = 1.0;
  int order = 1;

  bool operator==(const CosetMember&) const = default;
};

// Concepts reachable from `owner` through enabled excitatory relations.
// Members are sorted by (order, id) and never include the owner.
struct Coset {
  ConceptId owner;
  std::vector<CosetMember> members;
};

// First-order coset. Inhibitory edges never contribute. When several enabled
// relations reach the same concept the strongest one is kept (ties: smallest
// relation type). Throws kNotFound / kInvalidArgument (empty relation set).
Coset BuildCoset(const SemanticNetwork& net, std::string_view owner,
                 const std::set<std::string>& relation_types);

struct Feature {
  ConceptId concept_id;
  int order = 0;
  double weight = 1.0;

  bool operator==(const Feature&) const = default;
};

struct EnhancedDocument {
  std::string id;
  std::optional<std::string> label;
  std::vector<Feature> features;  // multiset; order-0 entries are the mapped mentions
};

// Order-0 document from pipeline mentions: the chosen concept when set,
// otherwise every candidate.
EnhancedDocument FromMentions(std::string id, std::optional<std::string> label,
                              std::span<const text::ConceptMention> mentions);

enum class RankingMetric { kInformationGain, kChiSquare };

RankingMetric ParseMetric(std::string_view name);
std::string_view MetricName(RankingMetric metric);

// Scores every concept that occurs in the corpus, using binary presence per
// document against the document labels. Information gain is in bits.
// Throws kDegenerateLabels on fewer than two classes and kInvalidArgument on
// an unlabeled document.
std::map<ConceptId, double> RankFeatures(std::span<const EnhancedDocument> docs,
                                         RankingMetric metric);

using CosetTable = std::map<ConceptId, Coset>;

struct ExpansionConfig {
  std::set<std::string> relation_types;  // empty: every relation type except sibling competition
  int max_order = 1;
  std::optional<double> tau;  // unset: keep the top `top_k` non-zero-order features
  RankingMetric metric = RankingMetric::kInformationGain;
  std::size_t top_k = 200;
};

struct ExpansionResult {
  std::vector<EnhancedDocument> documents;  // input order, features sorted by (order, id)
  std::set<ConceptId> selected;             // order-0 features plus surviving additions
  CosetTable cosets;                        // multi-order cosets over `selected`
  std::map<ConceptId, double> scores;       // last ranking
  int orders_run = 0;
};

// Iterated coset expansion with ranking-based pruning. Order-0 features are
// never pruned; order-k additions are cosets of the features that survived
// order k-1. Stops early when an order adds nothing.
ExpansionResult IterateExpansion(std::span<const EnhancedDocument> corpus,
                                 const SemanticNetwork& net, const ExpansionConfig& config);

using ConceptVector = std::map<ConceptId, double>;

// 1 at the owner, weight * gamma^order per member, then L2-normalized.
// An owner missing from the table yields the one-hot vector.
ConceptVector MakeConceptVector(std::string_view owner, const CosetTable& table, double gamma);

std::map<ConceptId, ConceptVector> MakeConceptVectors(const std::set<ConceptId>& owners,
                                                      const CosetTable& table, double gamma);

// Normalized sum of the feature concepts' vectors. Throws kEmptyDocument,
// or kNotFound when a feature has no vector.
ConceptVector DocumentVector(const EnhancedDocument& doc,
                             const std::map<ConceptId, ConceptVector>& vectors);

double L2Norm(const ConceptVector& v);

struct CooccurrenceTable {
  int window = 1;
  std::map<std::string, std::map<std::string, long>> vectors;

  // <V(a), V(b)>; zero when either word is absent.
  double Similarity(std::string_view a, std::string_view b) const;
};

// Counts, for every occurrence of w, the items within +/- window positions
// in the same stream.
CooccurrenceTable Cooccurrence(std::span<const std::vector<std::string>> streams, int window);

nlohmann::json ToJson(const EnhancedDocument& doc);

}  // namespace semmem::coset

#endif  // SEMMEM_COSET_HPP_
