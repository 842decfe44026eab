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

#include "semmem/coset.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <tuple>

#include "semmem/error.hpp"

namespace semmem::coset {
namespace {

// Empty `relation_types` means every relation type is enabled.
std::vector<CosetMember> FirstOrder(const SemanticNetwork& net, ConceptIndex owner,
                                    const std::set<std::string>& relation_types) {
  std::map<ConceptIndex, CosetMember> best;
  for (const Edge& e : net.OutEdges(owner)) {
    if (e.polarity != Polarity::kExcitatory || e.target == owner) continue;
    if (!relation_types.empty() && !relation_types.contains(e.relation_type)) continue;
    auto it = best.find(e.target);
    // OutEdges is sorted by relation type, so the first of equal weights wins.
    if (it == best.end() || e.weight > it->second.weight) {
      best[e.target] = CosetMember{net.id_at(e.target), e.relation_type, e.weight, 1};
    }
  }
  std::vector<CosetMember> out;
  out.reserve(best.size());
  for (auto& [idx, m] : best) out.push_back(std::move(m));
  return out;
}

double Entropy2(std::span<const double> counts, double total) {
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (double c : counts) {
    if (c > 0.0) {
      double p = c / total;
      h -= p * std::log2(p);
    }
  }
  return h;
}

void SortFeatures(std::vector<Feature>& features) {
  std::sort(features.begin(), features.end(), [](const Feature& a, const Feature& b) {
    return std::tie(a.order, a.concept_id, a.weight) < std::tie(b.order, b.concept_id, b.weight);
  });
}

}  // namespace

Coset BuildCoset(const SemanticNetwork& net, std::string_view owner,
                 const std::set<std::string>& relation_types) {
  if (relation_types.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "coset needs at least one relation type");
  }
  ConceptIndex idx = net.Require(owner);
  return Coset{net.id_at(idx), FirstOrder(net, idx, relation_types)};
}

EnhancedDocument FromMentions(std::string id, std::optional<std::string> label,
                              std::span<const text::ConceptMention> mentions) {
  EnhancedDocument doc{std::move(id), std::move(label), {}};
  for (const auto& m : mentions) {
    if (m.chosen) {
      doc.features.push_back(Feature{*m.chosen, 0, 1.0});
    } else {
      for (const ConceptId& c : m.candidates) doc.features.push_back(Feature{c, 0, 1.0});
    }
  }
  SortFeatures(doc.features);
  return doc;
}

RankingMetric ParseMetric(std::string_view name) {
  if (name == "information_gain" || name == "ig") return RankingMetric::kInformationGain;
  if (name == "chi_square" || name == "chi2") return RankingMetric::kChiSquare;
  throw Error(ErrorCode::kInvalidArgument, "unknown ranking metric '" + std::string(name) + "'");
}

std::string_view MetricName(RankingMetric metric) {
  return metric == RankingMetric::kInformationGain ? "information_gain" : "chi_square";
}

std::map<ConceptId, double> RankFeatures(std::span<const EnhancedDocument> docs,
                                         RankingMetric metric) {
  std::map<std::string, std::size_t> class_index;
  for (const auto& d : docs) {
    if (!d.label) throw Error(ErrorCode::kInvalidArgument, "document '" + d.id + "' has no label");
    class_index.emplace(*d.label, 0);
  }
  if (class_index.size() < 2) {
    throw Error(ErrorCode::kDegenerateLabels, "feature ranking needs at least two distinct labels");
  }
  std::size_t c = 0;
  for (auto& [label, idx] : class_index) idx = c++;
  const std::size_t num_classes = class_index.size();
  const double n = static_cast<double>(docs.size());

  std::vector<double> class_totals(num_classes, 0.0);
  // concept -> per-class count of documents containing it
  std::map<ConceptId, std::vector<double>> present;
  for (const auto& d : docs) {
    const std::size_t y = class_index.at(*d.label);
    class_totals[y] += 1.0;
    std::set<ConceptId> seen;
    for (const Feature& f : d.features) seen.insert(f.concept_id);
    for (const ConceptId& id : seen) {
      auto& row = present[id];
      if (row.empty()) row.assign(num_classes, 0.0);
      row[y] += 1.0;
    }
  }

  const double h_labels = Entropy2(class_totals, n);
  std::map<ConceptId, double> scores;
  std::vector<double> absent(num_classes);
  for (const auto& [id, row] : present) {
    double n_present = 0.0;
    for (std::size_t y = 0; y < num_classes; ++y) {
      n_present += row[y];
      absent[y] = class_totals[y] - row[y];
    }
    const double n_absent = n - n_present;
    double score = 0.0;
    if (metric == RankingMetric::kInformationGain) {
      score = h_labels - (n_present / n) * Entropy2(row, n_present) -
              (n_absent / n) * Entropy2(absent, n_absent);
    } else {
      for (std::size_t y = 0; y < num_classes; ++y) {
        for (auto [observed, margin] : {std::pair{row[y], n_present}, std::pair{absent[y], n_absent}}) {
          const double expected = margin * class_totals[y] / n;
          if (expected > 0.0) score += (observed - expected) * (observed - expected) / expected;
        }
      }
    }
    scores[id] = std::max(0.0, score);
  }
  return scores;
}

ExpansionResult IterateExpansion(std::span<const EnhancedDocument> corpus,
                                 const SemanticNetwork& net, const ExpansionConfig& config) {
  if (config.max_order < 1) throw Error(ErrorCode::kInvalidArgument, "max_order must be >= 1");
  if (config.tau && !(*config.tau >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "tau must be >= 0");

  ExpansionResult result;
  result.documents.assign(corpus.begin(), corpus.end());
  std::set<ConceptId> order0;
  for (auto& d : result.documents) {
    for (Feature& f : d.features) {
      if (f.order != 0) {
        throw Error(ErrorCode::kInvalidArgument, "input document '" + d.id + "' has non-zero-order features");
      }
      ConceptIndex idx = net.Require(f.concept_id);
      f.concept_id = net.id_at(idx);
      order0.insert(f.concept_id);
    }
    SortFeatures(d.features);
  }
  // Fails fast on degenerate labels even if nothing gets expanded.
  result.scores = RankFeatures(result.documents, config.metric);
  result.selected = order0;

  std::map<ConceptId, std::vector<CosetMember>> first_order;
  auto coset_of = [&](const ConceptId& id) -> const std::vector<CosetMember>& {
    auto it = first_order.find(id);
    if (it == first_order.end()) {
      it = first_order.emplace(id, FirstOrder(net, net.Require(id), config.relation_types)).first;
    }
    return it->second;
  };

  for (int k = 1; k <= config.max_order; ++k) {
    bool added_any = false;
    for (auto& d : result.documents) {
      std::set<ConceptId> have;
      for (const Feature& f : d.features) have.insert(f.concept_id);
      std::map<ConceptId, double> additions;
      for (const Feature& f : d.features) {
        if (f.order != k - 1) continue;
        for (const CosetMember& m : coset_of(f.concept_id)) {
          if (have.contains(m.id)) continue;
          double w = f.weight * m.weight;
          auto [it, inserted] = additions.emplace(m.id, w);
          if (!inserted) it->second = std::max(it->second, w);
        }
      }
      for (const auto& [id, w] : additions) d.features.push_back(Feature{id, k, w});
      added_any = added_any || !additions.empty();
    }
    if (!added_any) break;
    result.orders_run = k;

    // Cumulative ranking over everything added so far.
    result.scores = RankFeatures(result.documents, config.metric);
    std::map<ConceptId, int> min_order;
    for (const auto& d : result.documents) {
      for (const Feature& f : d.features) {
        if (order0.contains(f.concept_id)) continue;
        auto [it, inserted] = min_order.emplace(f.concept_id, f.order);
        if (!inserted) it->second = std::min(it->second, f.order);
      }
    }
    std::set<ConceptId> keep = order0;
    if (config.tau) {
      for (const auto& [id, ord] : min_order) {
        if (result.scores.at(id) >= *config.tau) keep.insert(id);
      }
    } else {
      std::vector<std::tuple<double, int, ConceptId>> ranked;
      for (const auto& [id, ord] : min_order) ranked.emplace_back(-result.scores.at(id), ord, id);
      std::sort(ranked.begin(), ranked.end());
      for (std::size_t i = 0; i < ranked.size() && i < config.top_k; ++i) {
        keep.insert(std::get<2>(ranked[i]));
      }
    }
    bool survivors_at_k = false;
    for (auto& d : result.documents) {
      std::erase_if(d.features, [&](const Feature& f) { return f.order > 0 && !keep.contains(f.concept_id); });
      SortFeatures(d.features);
      for (const Feature& f : d.features) survivors_at_k = survivors_at_k || f.order == k;
    }
    result.selected = std::move(keep);
    if (!survivors_at_k) break;
  }

  // Multi-order cosets restricted to selected concepts: breadth-first, the
  // shallowest order wins, then the strongest path.
  for (const ConceptId& owner : result.selected) {
    Coset coset{owner, {}};
    std::map<ConceptId, CosetMember> reached;
    std::vector<std::pair<ConceptId, double>> frontier{{owner, 1.0}};
    for (int k = 1; k <= config.max_order && !frontier.empty(); ++k) {
      std::map<ConceptId, CosetMember> level;
      for (const auto& [id, w] : frontier) {
        for (const CosetMember& m : coset_of(id)) {
          if (m.id == owner || reached.contains(m.id) || !result.selected.contains(m.id)) continue;
          double pw = w * m.weight;
          auto it = level.find(m.id);
          if (it == level.end() || pw > it->second.weight) {
            level[m.id] = CosetMember{m.id, m.relation_type, pw, k};
          }
        }
      }
      frontier.clear();
      for (auto& [id, m] : level) {
        frontier.emplace_back(id, m.weight);
        reached.emplace(id, std::move(m));
      }
    }
    for (auto& [id, m] : reached) coset.members.push_back(std::move(m));
    std::sort(coset.members.begin(), coset.members.end(), [](const CosetMember& a, const CosetMember& b) {
      return std::tie(a.order, a.id) < std::tie(b.order, b.id);
    });
    result.cosets.emplace(owner, std::move(coset));
  }
  return result;
}

double L2Norm(const ConceptVector& v) {
  double s = 0.0;
  for (const auto& [id, x] : v) s += x * x;
  return std::sqrt(s);
}

ConceptVector MakeConceptVector(std::string_view owner, const CosetTable& table, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "gamma must lie in (0, 1]");
  ConceptVector v;
  v[std::string(owner)] = 1.0;
  auto it = table.find(std::string(owner));
  if (it != table.end()) {
    for (const CosetMember& m : it->second.members) {
      v[m.id] += m.weight * std::pow(gamma, m.order);
    }
  }
  const double norm = L2Norm(v);
  for (auto& [id, x] : v) x /= norm;
  return v;
}

std::map<ConceptId, ConceptVector> MakeConceptVectors(const std::set<ConceptId>& owners,
                                                      const CosetTable& table, double gamma) {
  std::vector<ConceptId> ids(owners.begin(), owners.end());
  std::vector<ConceptVector> vecs(ids.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(ids.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      vecs[i] = MakeConceptVector(ids[i], table, gamma);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::map<ConceptId, ConceptVector> out;
  for (std::size_t i = 0; i < ids.size(); ++i) out.emplace(std::move(ids[i]), std::move(vecs[i]));
  return out;
}

ConceptVector DocumentVector(const EnhancedDocument& doc,
                             const std::map<ConceptId, ConceptVector>& vectors) {
  if (doc.features.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "document '" + doc.id + "' has no features");
  }
  ConceptVector sum;
  for (const Feature& f : doc.features) {
    auto it = vectors.find(f.concept_id);
    if (it == vectors.end()) {
      throw Error(ErrorCode::kNotFound, "no concept vector for '" + f.concept_id + "'");
    }
    for (const auto& [id, x] : it->second) sum[id] += x;
  }
  const double norm = L2Norm(sum);
  if (!(norm > 0.0)) throw Error(ErrorCode::kEmptyDocument, "document '" + doc.id + "' has a zero vector");
  for (auto& [id, x] : sum) x /= norm;
  return sum;
}

double CooccurrenceTable::Similarity(std::string_view a, std::string_view b) const {
  auto ia = vectors.find(std::string(a));
  auto ib = vectors.find(std::string(b));
  if (ia == vectors.end() || ib == vectors.end()) return 0.0;
  double s = 0.0;
  for (const auto& [u, count] : ia->second) {
    auto it = ib->second.find(u);
    if (it != ib->second.end()) s += static_cast<double>(count) * static_cast<double>(it->second);
  }
  return s;
}

CooccurrenceTable Cooccurrence(std::span<const std::vector<std::string>> streams, int window) {
  if (window < 1) throw Error(ErrorCode::kInvalidArgument, "window must be >= 1");
  CooccurrenceTable table;
  table.window = window;
  for (const auto& stream : streams) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(stream.size());
    for (std::ptrdiff_t p = 0; p < n; ++p) {
      auto& row = table.vectors[stream[p]];
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, p - window);
      const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n - 1, p + window);
      for (std::ptrdiff_t q = lo; q <= hi; ++q) {
        if (q != p) ++row[stream[q]];
      }
    }
  }
  return table;
}

nlohmann::json ToJson(const EnhancedDocument& doc) {
  nlohmann::json features = nlohmann::json::array();
  for (const Feature& f : doc.features) {
    features.push_back({{"concept", f.concept_id}, {"order", f.order}, {"weight", f.weight}});
  }
  nlohmann::json j = {{"id", doc.id}, {"features", std::move(features)}};
  j["label"] = doc.label ? nlohmann::json(*doc.label) : nlohmann::json(nullptr);
  return j;
}

}  // namespace semmem::coset
