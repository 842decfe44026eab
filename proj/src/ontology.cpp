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

#include "semmem/ontology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <tuple>

#include "semmem/error.hpp"
#include "semmem/normalize.hpp"
#include "semmem/porter_stemmer.hpp"
#include "semmem/tokenizer.hpp"

namespace semmem {
namespace {

struct RawConcept {
  std::string name;
  std::set<std::string> forms;
  std::string type;
  bool declared = false;
};

struct EdgeKey {
  ConceptId source;
  std::string relation_type;
  ConceptId target;
  auto operator<=>(const EdgeKey&) const = default;
};

struct EdgeValue {
  double weight;
  Polarity polarity;
};

std::string Trim(std::string_view s) {
  size_t b = 0;
  size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      fields.push_back(Trim(line.substr(start)));
      break;
    }
    fields.push_back(Trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return fields;
}

[[noreturn]] void ParseFail(std::string_view file, int line, const std::string& what) {
  std::ostringstream os;
  os << file << ":" << line << ": " << what;
  throw Error(ErrorCode::kParse, os.str());
}

ConceptId CheckedId(std::string_view raw, std::string_view file, int line) {
  std::string id = NormalizeId(Trim(raw));
  if (id.empty()) ParseFail(file, line, "empty concept id");
  if (ContainsWhitespace(id)) ParseFail(file, line, "concept id contains whitespace: '" + id + "'");
  return id;
}

void MergeEdge(std::map<EdgeKey, EdgeValue>& edges, EdgeKey key, EdgeValue value) {
  auto [it, inserted] = edges.emplace(std::move(key), value);
  if (inserted) return;
  EdgeValue& cur = it->second;
  // Max weight wins; equal weights resolve to inhibitory so the result does
  // not depend on line order.
  if (value.weight > cur.weight ||
      (value.weight == cur.weight && value.polarity == Polarity::kInhibitory)) {
    cur = value;
  }
}

std::string StemKey(std::string_view surface) {
  std::string key;
  for (const RawToken& tok : Tokenize(surface)) {
    if (!key.empty()) key.push_back(' ');
    key += PorterStem(tok.surface);
  }
  return key;
}

}  // namespace

std::string_view PolarityName(Polarity polarity) {
  return polarity == Polarity::kExcitatory ? "excitatory" : "inhibitory";
}

SemanticNetwork SemanticNetwork::Ingest(const std::filesystem::path& triples_path,
                                        const std::filesystem::path& lexicon_path,
                                        const IngestOptions& options) {
  std::ifstream triples(triples_path);
  if (!triples) throw Error(ErrorCode::kIo, "cannot open triples file " + triples_path.string());
  std::ifstream lexicon(lexicon_path);
  if (!lexicon) throw Error(ErrorCode::kIo, "cannot open lexicon file " + lexicon_path.string());
  return FromStreams(triples, lexicon, options);
}

SemanticNetwork SemanticNetwork::FromStreams(std::istream& triples_in, std::istream& lexicon_in,
                                             const IngestOptions& options) {
  std::map<ConceptId, RawConcept> raw;
  std::string line;
  int line_no = 0;
  int lexicon_records = 0;

  // Lexicon JSONL carries both concept declarations ({"id",...}) and
  // surface entries ({"surface",...}).
  while (std::getline(lexicon_in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::exception& e) {
      ParseFail("lexicon", line_no, std::string("malformed JSON: ") + e.what());
    }
    if (!rec.is_object()) ParseFail("lexicon", line_no, "record is not an object");
    ++lexicon_records;
    try {
      if (rec.contains("surface")) {
        if (!rec.contains("concept")) ParseFail("lexicon", line_no, "missing \"concept\"");
        ConceptId id = CheckedId(rec.at("concept").get<std::string>(), "lexicon", line_no);
        std::string surface = NormalizeSurface(rec.at("surface").get<std::string>());
        if (surface.empty()) ParseFail("lexicon", line_no, "empty surface");
        raw[id].forms.insert(surface);
      } else if (rec.contains("id")) {
        ConceptId id = CheckedId(rec.at("id").get<std::string>(), "lexicon", line_no);
        RawConcept& c = raw[id];
        c.declared = true;
        if (rec.contains("name")) c.name = rec.at("name").get<std::string>();
        if (rec.contains("type")) c.type = rec.at("type").get<std::string>();
        if (rec.contains("forms")) {
          for (const auto& f : rec.at("forms")) {
            std::string surface = NormalizeSurface(f.get<std::string>());
            if (!surface.empty()) c.forms.insert(surface);
          }
        }
      } else {
        ParseFail("lexicon", line_no, "record has neither \"surface\" nor \"id\"");
      }
    } catch (const nlohmann::json::exception& e) {
      ParseFail("lexicon", line_no, std::string("bad field: ") + e.what());
    }
  }

  std::map<EdgeKey, EdgeValue> merged;
  line_no = 0;
  while (std::getline(triples_in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(line);
    if (f.size() < 3 || f.size() > 5) {
      ParseFail("triples", line_no, "expected 3 to 5 tab-separated fields, got " +
                                        std::to_string(f.size()));
    }
    if (lexicon_records == 0) {
      throw Error(ErrorCode::kParse, "empty lexicon: relations cannot reference any concept");
    }
    ConceptId src = CheckedId(f[0], "triples", line_no);
    ConceptId dst = CheckedId(f[2], "triples", line_no);
    std::string rel = f[1];
    if (rel.empty() || ContainsWhitespace(rel)) ParseFail("triples", line_no, "bad relation type");
    double weight = 1.0;
    if (f.size() >= 4 && !f[3].empty()) {
      try {
        size_t used = 0;
        weight = std::stod(f[3], &used);
        if (used != f[3].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        ParseFail("triples", line_no, "weight is not a number: '" + f[3] + "'");
      }
      if (!std::isfinite(weight) || weight <= 0.0 || weight > 1.0) {
        ParseFail("triples", line_no, "weight outside (0,1]: " + f[3]);
      }
    }
    Polarity pol = Polarity::kExcitatory;
    if (f.size() == 5) {
      if (f[4] == "excitatory" || f[4] == "+") {
        pol = Polarity::kExcitatory;
      } else if (f[4] == "inhibitory" || f[4] == "-") {
        pol = Polarity::kInhibitory;
      } else {
        ParseFail("triples", line_no, "unknown polarity '" + f[4] + "'");
      }
    }
    for (const ConceptId* id : {&src, &dst}) {
      if (!raw.contains(*id)) {
        std::ostringstream os;
        os << "triples:" << line_no << ": undeclared concept '" << *id << "'";
        throw Error(ErrorCode::kNotFound, os.str());
      }
    }
    MergeEdge(merged, EdgeKey{src, rel, dst}, EdgeValue{weight, pol});
  }

  SemanticNetwork net;
  for (auto& [id, rc] : raw) {
    Concept c;
    c.id = id;
    if (rc.name.empty()) {
      c.preferred_name = rc.forms.empty() ? id : *rc.forms.begin();
    } else {
      c.preferred_name = rc.name;
    }
    rc.forms.insert(NormalizeSurface(c.preferred_name));
    c.lexical_forms.assign(rc.forms.begin(), rc.forms.end());
    c.semantic_type = rc.type;
    net.index_.emplace(id, static_cast<ConceptIndex>(net.concepts_.size()));
    net.concepts_.push_back(std::move(c));
  }

  for (ConceptIndex i = 0; i < net.concepts_.size(); ++i) {
    for (const std::string& form : net.concepts_[i].lexical_forms) {
      net.lexicon_[form].push_back(i);
    }
  }

  if (options.sibling_inhibition) {
    for (const auto& [surface, ids] : net.lexicon_) {
      if (ids.size() < 2) continue;
      for (ConceptIndex a : ids) {
        for (ConceptIndex b : ids) {
          if (a == b) continue;
          MergeEdge(merged,
                    EdgeKey{net.concepts_[a].id, options.sibling_relation, net.concepts_[b].id},
                    EdgeValue{options.sibling_weight, Polarity::kInhibitory});
        }
      }
    }
  }

  // std::map iteration gives (source id, relation, target id) order; the
  // outgoing view wants (relation, target) within each source.
  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, value] : merged) {
    edges.push_back(Edge{net.index_.at(key.source), net.index_.at(key.target), key.relation_type,
                         value.weight, value.polarity});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.source, a.relation_type, a.target) <
           std::tie(b.source, b.relation_type, b.target);
  });
  net.edges_ = std::move(edges);

  const size_t n = net.concepts_.size();
  net.out_offsets_.assign(n + 1, 0);
  for (const Edge& e : net.edges_) ++net.out_offsets_[e.source + 1];
  for (size_t i = 0; i < n; ++i) net.out_offsets_[i + 1] += net.out_offsets_[i];

  net.in_edges_ = net.edges_;
  std::sort(net.in_edges_.begin(), net.in_edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.target, a.source, a.relation_type) <
           std::tie(b.target, b.source, b.relation_type);
  });
  net.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : net.in_edges_) ++net.in_offsets_[e.target + 1];
  for (size_t i = 0; i < n; ++i) net.in_offsets_[i + 1] += net.in_offsets_[i];

  for (const auto& [surface, ids] : net.lexicon_) {
    std::vector<RawToken> toks = Tokenize(surface);
    if (toks.empty()) continue;
    std::string key = StemKey(surface);
    if (toks.size() == 1) {
      auto& v = net.stem_index_[key];
      v.insert(v.end(), ids.begin(), ids.end());
    } else {
      auto& v = net.collocations_[key];
      v.insert(v.end(), ids.begin(), ids.end());
      net.max_collocation_tokens_ = std::max(net.max_collocation_tokens_, toks.size());
    }
  }
  for (auto* index : {&net.stem_index_, &net.collocations_}) {
    for (auto& [key, ids] : *index) {
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
  }
  return net;
}

std::optional<ConceptIndex> SemanticNetwork::IndexOf(std::string_view id) const {
  auto it = index_.find(id);
  if (it != index_.end()) return it->second;
  std::string norm = NormalizeId(id);
  it = index_.find(norm);
  if (it != index_.end()) return it->second;
  return std::nullopt;
}

ConceptIndex SemanticNetwork::Require(std::string_view id) const {
  auto idx = IndexOf(id);
  if (!idx) throw Error(ErrorCode::kNotFound, "unknown concept '" + std::string(id) + "'");
  return *idx;
}

std::span<const Edge> SemanticNetwork::OutEdges(ConceptIndex index) const {
  return std::span<const Edge>(edges_).subspan(out_offsets_[index],
                                              out_offsets_[index + 1] - out_offsets_[index]);
}

std::span<const Edge> SemanticNetwork::InEdges(ConceptIndex index) const {
  return std::span<const Edge>(in_edges_).subspan(in_offsets_[index],
                                                 in_offsets_[index + 1] - in_offsets_[index]);
}

std::vector<Neighbor> SemanticNetwork::Neighbors(std::string_view id,
                                                 const std::set<std::string>* relation_filter) const {
  ConceptIndex idx = Require(id);
  std::vector<Neighbor> out;
  for (const Edge& e : OutEdges(idx)) {
    if (relation_filter && !relation_filter->contains(e.relation_type)) continue;
    out.push_back(Neighbor{concepts_[e.target].id, e.relation_type, e.weight, e.polarity});
  }
  return out;
}

std::vector<ConceptIndex> SemanticNetwork::LookupIndices(std::string_view normalized_surface) const {
  auto it = lexicon_.find(std::string(normalized_surface));
  if (it == lexicon_.end()) return {};
  return it->second;
}

std::vector<ConceptId> SemanticNetwork::Lookup(std::string_view surface) const {
  std::vector<ConceptId> out;
  for (ConceptIndex i : LookupIndices(NormalizeSurface(surface))) out.push_back(concepts_[i].id);
  return out;
}

bool SemanticNetwork::IsKnownSurface(std::string_view surface) const {
  return lexicon_.contains(NormalizeSurface(surface));
}

std::vector<ConceptIndex> SemanticNetwork::LookupStem(std::string_view stem) const {
  auto it = stem_index_.find(std::string(stem));
  return it == stem_index_.end() ? std::vector<ConceptIndex>{} : it->second;
}

std::vector<ConceptIndex> SemanticNetwork::LookupCollocation(std::string_view joined_stems) const {
  auto it = collocations_.find(std::string(joined_stems));
  return it == collocations_.end() ? std::vector<ConceptIndex>{} : it->second;
}

nlohmann::json SemanticNetwork::ToJson() const {
  nlohmann::json concepts = nlohmann::json::array();
  for (const Concept& c : concepts_) {
    concepts.push_back({{"id", c.id},
                        {"name", c.preferred_name},
                        {"forms", c.lexical_forms},
                        {"type", c.semantic_type}});
  }
  nlohmann::json relations = nlohmann::json::array();
  for (const Edge& e : edges_) {
    relations.push_back({{"source", concepts_[e.source].id},
                         {"relation_type", e.relation_type},
                         {"target", concepts_[e.target].id},
                         {"weight", e.weight},
                         {"polarity", PolarityName(e.polarity)}});
  }
  nlohmann::json lexicon = nlohmann::json::object();
  for (const auto& [surface, ids] : lexicon_) {
    nlohmann::json arr = nlohmann::json::array();
    for (ConceptIndex i : ids) arr.push_back(concepts_[i].id);
    lexicon[surface] = std::move(arr);
  }
  return {{"concepts", std::move(concepts)},
          {"relations", std::move(relations)},
          {"lexicon", std::move(lexicon)}};
}

std::string SemanticNetwork::Serialize() const { return ToJson().dump(); }

}  // namespace semmem
