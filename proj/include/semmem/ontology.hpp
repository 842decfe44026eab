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

#ifndef SEMMEM_ONTOLOGY_HPP_
#define SEMMEM_ONTOLOGY_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace semmem {

using ConceptId = std::string;
using ConceptIndex = std::uint32_t;

enum class Polarity { kExcitatory, kInhibitory };

std::string_view PolarityName(Polarity polarity);

struct Concept {
  ConceptId id;
  std::string preferred_name;
  std::vector<std::string> lexical_forms;  // normalized, sorted, unique
  std::string semantic_type;
};

struct Edge {
  ConceptIndex source = 0;
  ConceptIndex target = 0;
  std::string relation_type;
  double weight = 1.0;
  Polarity polarity = Polarity::kExcitatory;
};

struct Neighbor {
  ConceptId id;
  std::string relation_type;
  double weight = 1.0;
  Polarity polarity = Polarity::kExcitatory;

  bool operator==(const Neighbor&) const = default;
};

struct IngestOptions {
  bool sibling_inhibition = true;
  double sibling_weight = 0.8;
  std::string sibling_relation = "competes_with";
};

// The semantic memory: concepts, typed signed weighted relations, and the
// surface-form lexicon. Immutable once built; concept indices follow the
// byte order of concept ids, so every derived ordering depends only on file
// content.
class SemanticNetwork {
 public:
  SemanticNetwork() = default;

  static SemanticNetwork Ingest(const std::filesystem::path& triples_path,
                                const std::filesystem::path& lexicon_path,
                                const IngestOptions& options = {});
  static SemanticNetwork FromStreams(std::istream& triples, std::istream& lexicon,
                                     const IngestOptions& options = {});

  std::size_t size() const { return concepts_.size(); }
  std::size_t relation_count() const { return edges_.size(); }

  std::optional<ConceptIndex> IndexOf(std::string_view id) const;
  // Throws Error(kNotFound).
  ConceptIndex Require(std::string_view id) const;
  const Concept& concept_at(ConceptIndex index) const { return concepts_[index]; }
  const ConceptId& id_at(ConceptIndex index) const { return concepts_[index].id; }
  std::span<const Concept> concepts() const { return concepts_; }

  // Outgoing edges sorted by (relation_type, target id).
  std::span<const Edge> OutEdges(ConceptIndex index) const;
  // Incoming edges sorted by (source id, relation_type).
  std::span<const Edge> InEdges(ConceptIndex index) const;
  std::size_t OutDegree(ConceptIndex index) const { return OutEdges(index).size(); }
  std::size_t InDegree(ConceptIndex index) const { return InEdges(index).size(); }

  // Outgoing relations of `id`, optionally restricted to `relation_filter`.
  std::vector<Neighbor> Neighbors(std::string_view id,
                                  const std::set<std::string>* relation_filter = nullptr) const;

  // Concepts carrying the normalized surface, sorted by id.
  std::vector<ConceptId> Lookup(std::string_view surface) const;
  std::vector<ConceptIndex> LookupIndices(std::string_view normalized_surface) const;
  // Single-token surfaces indexed by Porter stem.
  std::vector<ConceptIndex> LookupStem(std::string_view stem) const;
  // Multi-token surfaces keyed by space-joined token stems.
  std::vector<ConceptIndex> LookupCollocation(std::string_view joined_stems) const;
  std::size_t max_collocation_tokens() const { return max_collocation_tokens_; }
  bool IsKnownSurface(std::string_view surface) const;

  const std::map<std::string, std::vector<ConceptIndex>>& surfaces() const { return lexicon_; }

  nlohmann::json ToJson() const;
  // Canonical serialization; identical inputs give identical bytes.
  std::string Serialize() const;

 private:
  std::vector<Concept> concepts_;
  std::map<ConceptId, ConceptIndex, std::less<>> index_;
  std::vector<Edge> edges_;                 // grouped by source
  std::vector<std::size_t> out_offsets_;    // size()+1
  std::vector<Edge> in_edges_;              // grouped by target
  std::vector<std::size_t> in_offsets_;
  std::map<std::string, std::vector<ConceptIndex>> lexicon_;
  std::map<std::string, std::vector<ConceptIndex>> stem_index_;
  std::map<std::string, std::vector<ConceptIndex>> collocations_;
  std::size_t max_collocation_tokens_ = 0;
};

}  // namespace semmem

#endif  // SEMMEM_ONTOLOGY_HPP_
