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


#include "semmem/corpus_io.hpp"

#include <cmath>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>

#include "semmem/error.hpp"
#include "semmem/wsd.hpp"

namespace semmem::corpus {

Document DocumentFromJson(const nlohmann::json& j) {
  Document d;
  d.id = j.at("id").get<std::string>();
  if (d.id.empty()) throw Error(ErrorCode::kParse, "document id is empty");
  if (j.contains("label") && !j.at("label").is_null()) d.label = j.at("label").get<std::string>();
  d.text = j.at("text").get<std::string>();
  return d;
}

std::vector<Document> ParseCorpus(std::istream& in) {
  std::vector<Document> docs;
  std::set<std::string> ids;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Document d = DocumentFromJson(nlohmann::json::parse(line));
      if (!ids.insert(d.id).second) throw Error(ErrorCode::kParse, "duplicate document id '" + d.id + "'");
      docs.push_back(std::move(d));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, "corpus:" + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, "corpus:" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return docs;
}

std::vector<Document> LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open corpus " + path.string());
  return ParseCorpus(in);
}

std::string EnhancedJsonl(std::span<const Document> docs, std::span<const coset::EnhancedDocument> enhanced) {
  std::string out;
  for (std::size_t i = 0; i < enhanced.size(); ++i) {
    nlohmann::json j = coset::ToJson(enhanced[i]);
    nlohmann::json row = {{"id", j["id"]}, {"label", j["label"]}};
    row["text"] = i < docs.size() ? docs[i].text : std::string();
    row["features"] = j["features"];
    out += row.dump() + "\n";
  }
  return out;
}

VectorTable VectorsFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "vector table must be a JSON object");
  VectorTable table;
  for (const auto& [doc, vec] : j.items()) {
    if (!vec.is_object()) throw Error(ErrorCode::kParse, "vector for '" + doc + "' must be an object");
    cluster::SparseVector v;
    for (const auto& [key, value] : vec.items()) {
      if (!value.is_number()) throw Error(ErrorCode::kParse, "non-numeric entry in vector '" + doc + "'");
      const double x = value.get<double>();
      if (!std::isfinite(x)) throw Error(ErrorCode::kParse, "non-finite entry in vector '" + doc + "'");
      v[key] = x;
    }
    table.emplace(doc, std::move(v));
  }
  return table;
}

VectorTable LoadVectors(const std::filesystem::path& path) {
  try {
    return VectorsFromJson(nlohmann::json::parse(ReadFile(path)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

nlohmann::json VectorsToJson(const VectorTable& table) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [doc, v] : table) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto& [key, x] : v) row[key] = x;
    j[doc] = std::move(row);
  }
  return j;
}

std::vector<cluster::DocumentPoint> ToPoints(const VectorTable& table) {
  std::vector<cluster::DocumentPoint> points;
  for (const auto& [doc, v] : table) {
    double norm = 0.0;
    for (const auto& [k, x] : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw Error(ErrorCode::kEmptyDocument, "vector for '" + doc + "' is zero");
    cluster::DocumentPoint p{doc, {}};
    for (const auto& [k, x] : v) p.vector[k] = x / norm;
    points.push_back(std::move(p));
  }
  return points;
}

nlohmann::json EnrichOptions::ToJson() const {
  nlohmann::json j;
  j["relation_types"] = expansion.relation_types;
  j["max_order"] = expansion.max_order;
  j["tau"] = expansion.tau ? nlohmann::json(*expansion.tau) : nlohmann::json(nullptr);
  j["metric"] = coset::MetricName(expansion.metric);
  j["top_k"] = expansion.top_k;
  j["gamma"] = gamma;
  j["spelling"] = pipeline.spelling;
  j["max_senses"] = pipeline.max_senses;
  j["disambiguate"] = disambiguate;
  j["activation"] = activation.ToJson();
  return j;
}

EnrichOptions EnrichOptions::FromJson(const nlohmann::json& j) {
  EnrichOptions o;
  if (j.is_null()) return o;
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "enrich options must be an object");
  try {
    if (j.contains("relation_types")) {
      o.expansion.relation_types = j.at("relation_types").get<std::set<std::string>>();
    }
    o.expansion.max_order = j.value("max_order", o.expansion.max_order);
    if (j.contains("tau") && !j.at("tau").is_null()) o.expansion.tau = j.at("tau").get<double>();
    if (j.contains("metric")) o.expansion.metric = coset::ParseMetric(j.at("metric").get<std::string>());
    o.expansion.top_k = j.value("top_k", o.expansion.top_k);
    o.gamma = j.value("gamma", o.gamma);
    o.pipeline.spelling = j.value("spelling", o.pipeline.spelling);
    o.pipeline.max_senses = j.value("max_senses", o.pipeline.max_senses);
    o.disambiguate = j.value("disambiguate", o.disambiguate);
    if (j.contains("activation")) o.activation = activation::ActivationConfig::FromJson(j.at("activation"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("enrich options: ") + e.what());
  }
  if (o.expansion.max_order < 1) throw Error(ErrorCode::kInvalidArgument, "max_order must be >= 1");
  if (o.expansion.tau && !(*o.expansion.tau >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "tau must be >= 0");
  if (!(o.gamma > 0.0 && o.gamma <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "gamma must lie in (0, 1]");
  return o;
}

EnrichResult Enrich(std::span<const Document> docs, const SemanticNetwork& net, const text::StopList& stoplist,
                    const EnrichOptions& options) {
  EnrichResult out;
  out.order0.resize(docs.size());
  // Documents are independent; each slot is written by one iteration.
  std::vector<std::exception_ptr> errors(docs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < docs.size(); ++i) {
    try {
      text::AnalyzedText analyzed = text::Analyze(docs[i].text, net, stoplist, options.pipeline);
      if (options.disambiguate && !analyzed.mentions.empty()) {
        wsd::ConsistentConceptGraph g = wsd::DisambiguateActivation(analyzed.mentions, net, options.activation);
        for (const auto& c : g.chosen) analyzed.mentions[c.mention].chosen = c.concept_id;
      }
      out.order0[i] = coset::FromMentions(docs[i].id, docs[i].label, analyzed.mentions);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  out.expansion = coset::IterateExpansion(out.order0, net, options.expansion);
  const auto concept_vectors = coset::MakeConceptVectors(out.expansion.selected, out.expansion.cosets, options.gamma);
  for (const auto& doc : out.expansion.documents) {
    out.vectors.emplace(doc.id, coset::DocumentVector(doc, concept_vectors));
  }
  return out;
}

VectorTable BaselineVectors(std::span<const coset::EnhancedDocument> order0) {
  VectorTable table;
  for (const auto& doc : order0) {
    if (doc.features.empty()) throw Error(ErrorCode::kEmptyDocument, "document '" + doc.id + "' has no features");
    cluster::SparseVector v;
    for (const auto& f : doc.features) {
      if (f.order == 0) v[f.concept_id] += 1.0;
    }
    double norm = 0.0;
    for (const auto& [k, x] : v) norm += x * x;
    norm = std::sqrt(norm);
    for (auto& [k, x] : v) x /= norm;
    table.emplace(doc.id, std::move(v));
  }
  return table;
}

std::map<std::string, std::string> GoldLabels(std::span<const Document> docs) {
  std::map<std::string, std::string> gold;
  for (const auto& d : docs) {
    if (d.label) gold.emplace(d.id, *d.label);
  }
  return gold;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << body;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace semmem::corpus
