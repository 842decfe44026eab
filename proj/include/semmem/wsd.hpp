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

#ifndef SEMMEM_WSD_HPP_
#define SEMMEM_WSD_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "semmem/activation.hpp"
#include "semmem/ontology.hpp"
#include "semmem/text_pipeline.hpp"

namespace semmem::wsd {

// ---------------------------------------------------------------------------
// Activation-based disambiguation
// ---------------------------------------------------------------------------

struct ChosenSense {
  std::size_t mention = 0;
  ConceptId concept_id;
  double activation = 0.0;
  bool tie = false;  // the winner shared its activation with another candidate
};

struct GraphEdge {
  ConceptId source;
  std::string relation_type;
  ConceptId target;
  double weight = 1.0;
  Polarity polarity = Polarity::kExcitatory;
};

struct ConsistentConceptGraph {
  std::vector<ChosenSense> chosen;  // one per mention, in mention order
  std::vector<GraphEdge> edges;     // network relations among chosen concepts
  double score = 0.0;               // sum of the chosen concepts' converged activation
  bool converged = false;
  int iterations = 0;
  activation::ActivationVector activations;  // after per-mention competition
};

// Seeds each candidate with 1/|candidates| (unambiguous mentions with 1),
// propagates, then lets each mention's candidates compete
// (winner-takes-all). A non-converged run is flagged, not rejected.
// Throws kInvalidArgument when `mentions` is empty.
ConsistentConceptGraph DisambiguateActivation(std::span<const text::ConceptMention> mentions,
                                              const SemanticNetwork& net,
                                              const activation::ActivationConfig& cfg);

// Seed map used by DisambiguateActivation; clamped to a_max.
std::map<ConceptId, double> MentionSeeds(std::span<const text::ConceptMention> mentions,
                                         double a_max);

nlohmann::json ToJson(const ConsistentConceptGraph& graph);

// ---------------------------------------------------------------------------
// Reference-corpus synset counting
// ---------------------------------------------------------------------------

struct Synset {
  std::string id;
  std::vector<ConceptId> members;  // sorted, non-empty
  std::optional<std::string> gloss;
};

class SynsetInventory {
 public:
  SynsetInventory() = default;
  // Members must exist in `net` (kNotFound otherwise); ids must be unique.
  SynsetInventory(std::vector<Synset> synsets, const SemanticNetwork& net);
  // JSONL: {"id":..., "members":[...], "gloss":...}
  static SynsetInventory Load(const std::filesystem::path& path, const SemanticNetwork& net);
  static SynsetInventory Parse(std::istream& in, const SemanticNetwork& net);

  std::size_t size() const { return synsets_.size(); }
  const Synset& at(std::size_t i) const { return synsets_[i]; }
  std::span<const Synset> synsets() const { return synsets_; }
  // Synset positions containing the concept, in id order.
  std::span<const std::size_t> Containing(ConceptIndex concept_index) const;

 private:
  std::vector<Synset> synsets_;  // sorted by id
  std::vector<std::vector<std::size_t>> by_concept_;
};

struct SynsetCountTable {
  std::map<std::string, long> counts;  // every inventory synset, zero included
  std::string source;
  long occurrences = 0;  // concept occurrences scanned

  long total() const;
  nlohmann::json ToJson() const;
};

struct ReferenceOptions {
  text::PipelineOptions pipeline = {.max_senses = text::kDefaultMaxSenses,
                                    .max_edits = text::kDefaultMaxEdits,
                                    .spelling = false,
                                    .rewrites = {}};
};

// Reads every reference text through the pipeline; each concept occurrence
// w adds 1 to N(S) for every synset S containing w. Texts are processed in
// parallel with per-thread tables merged by addition.
// Throws kEmptyReferenceCorpus when `reference` is empty.
SynsetCountTable BuildReferenceCounts(std::span<const std::string> reference,
                                      const SynsetInventory& synsets, const SemanticNetwork& net,
                                      const text::StopList& stoplist,
                                      const ReferenceOptions& options = {},
                                      std::string source = "reference");

// Counts for one already-analyzed text; shared by the parallel kernel and
// its serial reference.
void AccumulateCounts(std::span<const text::ConceptMention> mentions, const SynsetInventory& synsets,
                      const SemanticNetwork& net, std::vector<long>& counts, long& occurrences);

struct AnnotatedMention {
  std::size_t char_begin = 0;
  std::size_t char_end = 0;
  std::string surface;
  ConceptId concept_id;
  std::optional<std::string> synset;
  std::vector<std::string> flags;  // "tie", "unseen", "no_synset", "not_converged"
};

struct AnnotateOptions {
  text::PipelineOptions pipeline = ReferenceOptions{}.pipeline;
  activation::ActivationConfig activation;
  bool normalize_by_size = false;  // rank by N(S)/|S| instead of N(S)
};

// Replaces every mention by the containing synset with the highest count.
std::vector<AnnotatedMention> AnnotateSynsets(std::string_view text, const SynsetCountTable& counts,
                                              const SynsetInventory& synsets,
                                              const SemanticNetwork& net,
                                              const text::StopList& stoplist,
                                              const AnnotateOptions& options = {});

nlohmann::json ToJson(const AnnotatedMention& m);

}  // namespace semmem::wsd

#endif  // SEMMEM_WSD_HPP_
