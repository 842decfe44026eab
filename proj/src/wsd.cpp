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

#include "semmem/wsd.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "semmem/error.hpp"
#include "semmem/normalize.hpp"

namespace semmem::wsd {

std::map<ConceptId, double> MentionSeeds(std::span<const text::ConceptMention> mentions,
                                         double a_max) {
  std::map<ConceptId, double> seeds;
  for (const auto& m : mentions) {
    if (m.candidates.empty()) continue;
    const double share = 1.0 / static_cast<double>(m.candidates.size());
    for (const ConceptId& c : m.candidates) seeds[c] += share;
  }
  for (auto& [id, v] : seeds) v = std::min(v, a_max);
  return seeds;
}

ConsistentConceptGraph DisambiguateActivation(std::span<const text::ConceptMention> mentions,
                                              const SemanticNetwork& net,
                                              const activation::ActivationConfig& cfg) {
  if (mentions.empty()) throw Error(ErrorCode::kInvalidArgument, "no mentions to disambiguate");
  for (const auto& m : mentions) {
    if (m.candidates.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "mention '" + m.matched_surface + "' has no candidates");
    }
  }
  // Mention evidence is held as external input; without it every activation
  // decays to the threshold and all candidates tie at zero.
  activation::ActivationConfig sustained = cfg;
  sustained.sustain_seeds = true;
  activation::ActivationState state =
      activation::Propagate(net, MentionSeeds(mentions, cfg.a_max), sustained);

  ConsistentConceptGraph graph;
  graph.converged = state.converged;
  graph.iterations = state.iteration;
  const std::vector<double> converged = state.values;

  std::set<ConceptIndex> chosen_set;
  for (std::size_t mi = 0; mi < mentions.size(); ++mi) {
    std::vector<ConceptIndex> group;
    for (const ConceptId& c : mentions[mi].candidates) group.push_back(net.Require(c));
    std::sort(group.begin(), group.end());
    ConceptIndex winner = group.front();
    for (ConceptIndex g : group) {
      if (converged[g] > converged[winner]) winner = g;
    }
    bool tie = false;
    for (ConceptIndex g : group) tie = tie || (g != winner && converged[g] == converged[winner]);
    graph.chosen.push_back(ChosenSense{mi, net.id_at(winner), converged[winner], tie});
    graph.score += converged[winner];
    chosen_set.insert(winner);
    if (group.size() > 1) {
      std::set<ConceptId> ids(mentions[mi].candidates.begin(), mentions[mi].candidates.end());
      state = activation::WinnerTakeMost(net, std::move(state), ids, 0.0);
    }
  }
  // A concept that won one mention keeps its converged value even if it lost
  // a different competition.
  for (ConceptIndex c : chosen_set) state.values[c] = converged[c];
  graph.activations = activation::Snapshot(net, state);

  for (ConceptIndex c : chosen_set) {
    for (const Edge& e : net.OutEdges(c)) {
      if (!chosen_set.contains(e.target)) continue;
      graph.edges.push_back(
          GraphEdge{net.id_at(e.source), e.relation_type, net.id_at(e.target), e.weight, e.polarity});
    }
  }
  return graph;
}

nlohmann::json ToJson(const ConsistentConceptGraph& graph) {
  nlohmann::json chosen = nlohmann::json::array();
  for (const auto& c : graph.chosen) {
    chosen.push_back({{"mention", c.mention},
                      {"concept", c.concept_id},
                      {"activation", c.activation},
                      {"tie", c.tie}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"source", e.source},
                     {"relation_type", e.relation_type},
                     {"target", e.target},
                     {"weight", e.weight},
                     {"polarity", PolarityName(e.polarity)}});
  }
  return {{"chosen", std::move(chosen)},
          {"edges", std::move(edges)},
          {"score", graph.score},
          {"converged", graph.converged},
          {"iterations", graph.iterations},
          {"activations", activation::VectorToJson(graph.activations)}};
}

SynsetInventory::SynsetInventory(std::vector<Synset> synsets, const SemanticNetwork& net) {
  std::sort(synsets.begin(), synsets.end(), [](const Synset& a, const Synset& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < synsets.size(); ++i) {
    if (synsets[i].id == synsets[i - 1].id) {
      throw Error(ErrorCode::kParse, "duplicate synset id '" + synsets[i].id + "'");
    }
  }
  by_concept_.assign(net.size(), {});
  for (std::size_t s = 0; s < synsets.size(); ++s) {
    Synset& syn = synsets[s];
    if (syn.members.empty()) throw Error(ErrorCode::kParse, "synset '" + syn.id + "' has no members");
    std::set<ConceptIndex> members;
    for (const ConceptId& m : syn.members) members.insert(net.Require(m));
    syn.members.clear();
    for (ConceptIndex m : members) {
      syn.members.push_back(net.id_at(m));
      by_concept_[m].push_back(s);
    }
  }
  synsets_ = std::move(synsets);
}

SynsetInventory SynsetInventory::Parse(std::istream& in, const SemanticNetwork& net) {
  std::vector<Synset> synsets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      Synset s;
      s.id = j.at("id").get<std::string>();
      for (const auto& m : j.at("members")) s.members.push_back(m.get<std::string>());
      if (j.contains("gloss") && j["gloss"].is_string()) s.gloss = j["gloss"].get<std::string>();
      synsets.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      std::ostringstream os;
      os << "synsets:" << line_no << ": " << e.what();
      throw Error(ErrorCode::kParse, os.str());
    }
  }
  return SynsetInventory(std::move(synsets), net);
}

SynsetInventory SynsetInventory::Load(const std::filesystem::path& path, const SemanticNetwork& net) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open synset file " + path.string());
  return Parse(in, net);
}

std::span<const std::size_t> SynsetInventory::Containing(ConceptIndex concept_index) const {
  if (concept_index >= by_concept_.size()) return {};
  return by_concept_[concept_index];
}

long SynsetCountTable::total() const {
  long t = 0;
  for (const auto& [id, n] : counts) t += n;
  return t;
}

nlohmann::json SynsetCountTable::ToJson() const {
  return {{"source", source}, {"occurrences", occurrences}, {"counts", counts}};
}

void AccumulateCounts(std::span<const text::ConceptMention> mentions, const SynsetInventory& synsets,
                      const SemanticNetwork& net, std::vector<long>& counts, long& occurrences) {
  for (const auto& m : mentions) {
    auto count_concept = [&](const ConceptId& id) {
      ++occurrences;
      for (std::size_t s : synsets.Containing(net.Require(id))) ++counts[s];
    };
    if (m.chosen) {
      count_concept(*m.chosen);
    } else {
      for (const ConceptId& c : m.candidates) count_concept(c);
    }
  }
}

SynsetCountTable BuildReferenceCounts(std::span<const std::string> reference,
                                      const SynsetInventory& synsets, const SemanticNetwork& net,
                                      const text::StopList& stoplist, const ReferenceOptions& options,
                                      std::string source) {
  if (reference.empty()) throw Error(ErrorCode::kEmptyReferenceCorpus, "reference corpus is empty");
  const std::size_t num_synsets = synsets.size();
  std::vector<long> counts(num_synsets, 0);
  long occurrences = 0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(reference.size());
  std::exception_ptr failure;

#pragma omp parallel
  {
    std::vector<long> local(num_synsets, 0);
    long local_occ = 0;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        text::AnalyzedText analyzed = text::Analyze(reference[i], net, stoplist, options.pipeline);
        AccumulateCounts(analyzed.mentions, synsets, net, local, local_occ);
      } catch (...) {
#pragma omp critical(semmem_counts_error)
        failure = std::current_exception();
      }
    }
    // Integer addition: merge order cannot change the result.
#pragma omp critical(semmem_counts_merge)
    {
      for (std::size_t s = 0; s < num_synsets; ++s) counts[s] += local[s];
      occurrences += local_occ;
    }
  }
  if (failure) std::rethrow_exception(failure);

  SynsetCountTable table;
  table.source = std::move(source);
  table.occurrences = occurrences;
  for (std::size_t s = 0; s < num_synsets; ++s) table.counts[synsets.at(s).id] = counts[s];
  return table;
}

std::vector<AnnotatedMention> AnnotateSynsets(std::string_view text_in, const SynsetCountTable& counts,
                                              const SynsetInventory& synsets,
                                              const SemanticNetwork& net,
                                              const text::StopList& stoplist,
                                              const AnnotateOptions& options) {
  text::AnalyzedText analyzed = text::Analyze(text_in, net, stoplist, options.pipeline);
  std::vector<AnnotatedMention> out;
  if (analyzed.mentions.empty()) return out;

  ConsistentConceptGraph fallback = DisambiguateActivation(analyzed.mentions, net, options.activation);

  for (std::size_t mi = 0; mi < analyzed.mentions.size(); ++mi) {
    const text::ConceptMention& m = analyzed.mentions[mi];
    AnnotatedMention a;
    a.char_begin = analyzed.tokens[m.token_begin].begin;
    a.char_end = analyzed.tokens[m.token_end - 1].end;
    a.surface = m.matched_surface;
    a.concept_id = fallback.chosen[mi].concept_id;
    if (!fallback.converged) a.flags.push_back("not_converged");

    // Synsets reachable from any candidate sense of the mention.
    std::map<std::size_t, ConceptIndex> containing;
    for (const ConceptId& c : m.candidates) {
      ConceptIndex ci = net.Require(c);
      for (std::size_t s : synsets.Containing(ci)) containing.emplace(s, ci);
    }
    if (containing.empty()) {
      a.flags.push_back("no_synset");
    } else if (containing.size() == 1) {
      a.synset = synsets.at(containing.begin()->first).id;
      a.concept_id = net.id_at(containing.begin()->second);
    } else {
      double best = -1.0;
      std::size_t best_s = 0;
      bool tie = false;
      for (const auto& [s, ci] : containing) {
        const Synset& syn = synsets.at(s);
        auto it = counts.counts.find(syn.id);
        double score = it == counts.counts.end() ? 0.0 : static_cast<double>(it->second);
        if (options.normalize_by_size) score /= static_cast<double>(syn.members.size());
        if (score > best) {
          best = score;
          best_s = s;
          tie = false;
        } else if (score == best) {
          tie = true;  // map order keeps the smallest id in best_s
        }
      }
      if (best <= 0.0) {
        a.flags.push_back("unseen");
      } else {
        a.synset = synsets.at(best_s).id;
        a.concept_id = net.id_at(containing.at(best_s));
        if (tie) a.flags.push_back("tie");
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

nlohmann::json ToJson(const AnnotatedMention& m) {
  nlohmann::json j = {{"surface", m.surface},
                      {"span", {m.char_begin, m.char_end}},
                      {"concept", m.concept_id},
                      {"flags", m.flags}};
  j["synset"] = m.synset ? nlohmann::json(*m.synset) : nlohmann::json(nullptr);
  return j;
}

}  // namespace semmem::wsd
