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


#ifndef SEMMEM_CORPUS_IO_HPP_
#define SEMMEM_CORPUS_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "semmem/activation.hpp"
#include "semmem/cluster.hpp"
#include "semmem/coset.hpp"
#include "semmem/ontology.hpp"
#include "semmem/text_pipeline.hpp"

namespace semmem::corpus {

struct Document {
  std::string id;
  std::optional<std::string> label;
  std::string text;
};

// JSONL {"id","label","text"}; label may be absent or null. Duplicate ids
// and parse failures throw kParse with the line number.
std::vector<Document> ParseCorpus(std::istream& in);
std::vector<Document> LoadCorpus(const std::filesystem::path& path);
Document DocumentFromJson(const nlohmann::json& j);

// {"id","label","text","features":[{"concept","order","weight"}]}
std::string EnhancedJsonl(std::span<const Document> docs, std::span<const coset::EnhancedDocument> enhanced);

using VectorTable = std::map<std::string, cluster::SparseVector>;

// {"doc": {"feature": value, ...}, ...}
VectorTable VectorsFromJson(const nlohmann::json& j);
VectorTable LoadVectors(const std::filesystem::path& path);
nlohmann::json VectorsToJson(const VectorTable& table);
// Unit-length points in table order. Throws kEmptyDocument for a zero
// vector.
std::vector<cluster::DocumentPoint> ToPoints(const VectorTable& table);

struct EnrichOptions {
  text::PipelineOptions pipeline;
  coset::ExpansionConfig expansion;
  double gamma = 0.5;
  // Resolve senses with activation before expansion; otherwise every
  // candidate sense of a mention becomes an order-0 feature.
  bool disambiguate = false;
  activation::ActivationConfig activation;

  nlohmann::json ToJson() const;
  // Missing fields keep their defaults. Throws kInvalidArgument.
  static EnrichOptions FromJson(const nlohmann::json& j);
};

struct EnrichResult {
  std::vector<coset::EnhancedDocument> order0;  // before expansion
  coset::ExpansionResult expansion;
  VectorTable vectors;  // unit document vectors keyed by doc id
};

// Text pipeline, expansion and document vectors for a labeled corpus.
EnrichResult Enrich(std::span<const Document> docs, const SemanticNetwork& net, const text::StopList& stoplist,
                    const EnrichOptions& options);

// Document vectors built from the order-0 features alone, one-hot per
// concept (the unenriched baseline).
VectorTable BaselineVectors(std::span<const coset::EnhancedDocument> order0);

std::map<std::string, std::string> GoldLabels(std::span<const Document> docs);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& body);

}  // namespace semmem::corpus

#endif  // SEMMEM_CORPUS_IO_HPP_
