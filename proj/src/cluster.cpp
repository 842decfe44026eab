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

#include "semmem/cluster.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>

#include "semmem/error.hpp"

namespace semmem::cluster {
namespace {

using IndexedVector = std::vector<std::pair<std::uint32_t, double>>;

double SparseDot(const IndexedVector& a, const IndexedVector& b) {
  double s = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (b[j].first < a[i].first) {
      ++j;
    } else {
      s += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

double Choose2(double x) { return x * (x - 1.0) / 2.0; }

std::vector<int> Encode(std::span<const std::string> labels) {
  std::map<std::string, int> ids;
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    auto [it, inserted] = ids.emplace(l, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

DistanceMatrix CosineDistances(std::span<const SparseVector> vectors) {
  // Shared dimension numbering; std::map order makes it deterministic.
  std::map<std::string, std::uint32_t> dims;
  for (const auto& v : vectors) {
    for (const auto& [key, x] : v) dims.emplace(key, 0);
  }
  std::uint32_t next = 0;
  for (auto& [key, id] : dims) id = next++;
  std::vector<IndexedVector> indexed(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (const auto& [key, x] : vectors[i]) indexed[i].emplace_back(dims.at(key), x);
  }

  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(vectors.size());
  DistanceMatrix d(vectors.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
      double dist = 1.0 - SparseDot(indexed[i], indexed[j]);
      d.Set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), std::max(0.0, dist));
    }
  }
  return d;
}

std::vector<int> AverageLinkage(const DistanceMatrix& distances, int k) {
  const std::size_t n = distances.size();
  if (n == 0) return {};
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k=" + std::to_string(k) + " must lie in [1, " + std::to_string(n) + "]");
  }
  std::vector<double> d(distances.data().begin(), distances.data().end());
  std::vector<std::size_t> size(n, 1);
  std::vector<bool> active(n, true);
  std::vector<std::size_t> owner(n);
  std::iota(owner.begin(), owner.end(), 0);

  for (std::size_t clusters = n; clusters > static_cast<std::size_t>(k); --clusters) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (d[i * n + j] < best) {
          best = d[i * n + j];
          bi = i;
          bj = j;
        }
      }
    }
    const double si = static_cast<double>(size[bi]);
    const double sj = static_cast<double>(size[bj]);
    for (std::size_t o = 0; o < n; ++o) {
      if (!active[o] || o == bi || o == bj) continue;
      double merged = (si * d[bi * n + o] + sj * d[bj * n + o]) / (si + sj);
      d[bi * n + o] = merged;
      d[o * n + bi] = merged;
    }
    size[bi] += size[bj];
    active[bj] = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (owner[p] == bj) owner[p] = bi;
    }
  }

  std::map<std::size_t, int> renumber;
  std::vector<int> labels(n);
  for (std::size_t p = 0; p < n; ++p) {
    auto [it, inserted] = renumber.emplace(owner[p], static_cast<int>(renumber.size()));
    labels[p] = it->second;
  }
  return labels;
}

double Purity(std::span<const int> clusters, std::span<const std::string> gold) {
  if (clusters.size() != gold.size()) throw Error(ErrorCode::kInvalidArgument, "label length mismatch");
  if (clusters.empty()) return 1.0;
  std::map<int, std::map<std::string, int>> table;
  for (std::size_t i = 0; i < clusters.size(); ++i) ++table[clusters[i]][gold[i]];
  long hit = 0;
  for (const auto& [c, row] : table) {
    int best = 0;
    for (const auto& [g, count] : row) best = std::max(best, count);
    hit += best;
  }
  return static_cast<double>(hit) / static_cast<double>(clusters.size());
}

double AdjustedRandIndex(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "label length mismatch");
  const double n = static_cast<double>(a.size());
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> rows;
  std::map<int, double> cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }
  double index = 0.0;
  for (const auto& [key, c] : joint) index += Choose2(c);
  double sum_a = 0.0;
  for (const auto& [key, c] : rows) sum_a += Choose2(c);
  double sum_b = 0.0;
  for (const auto& [key, c] : cols) sum_b += Choose2(c);
  const double pairs = Choose2(n);
  const double expected = pairs > 0.0 ? sum_a * sum_b / pairs : 0.0;
  const double max_index = 0.5 * (sum_a + sum_b);
  if (max_index == expected) {
    // Both partitions trivial (all singletons or one block): agreement is
    // all-or-nothing.
    bool same = joint.size() == rows.size() && joint.size() == cols.size();
    return same ? 1.0 : 0.0;
  }
  return (index - expected) / (max_index - expected);
}

double AdjustedRandIndex(std::span<const int> clusters, std::span<const std::string> gold) {
  std::vector<int> g = Encode(gold);
  return AdjustedRandIndex(clusters, g);
}

ClusterResult ClusterDocuments(std::span<const DocumentPoint> points, int k,
                               const std::map<std::string, std::string>* gold) {
  const std::size_t n = points.size();
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k=" + std::to_string(k) + " must lie in [1, n=" + std::to_string(n) + "]");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a].doc_id < points[b].doc_id; });
  for (std::size_t i = 1; i < n; ++i) {
    if (points[order[i]].doc_id == points[order[i - 1]].doc_id) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate doc id '" + points[order[i]].doc_id + "'");
    }
  }

  ClusterResult result;
  result.k = k;
  std::vector<SparseVector> vectors;
  vectors.reserve(n);
  for (std::size_t i : order) {
    result.doc_ids.push_back(points[i].doc_id);
    vectors.push_back(points[i].vector);
  }
  result.distances = CosineDistances(vectors);
  std::vector<int> labels = AverageLinkage(result.distances, k);
  for (std::size_t i = 0; i < n; ++i) result.labels[result.doc_ids[i]] = labels[i];

  if (gold) {
    std::vector<std::string> g;
    g.reserve(n);
    for (const auto& id : result.doc_ids) {
      auto it = gold->find(id);
      if (it == gold->end()) throw Error(ErrorCode::kInvalidArgument, "no gold label for '" + id + "'");
      g.push_back(it->second);
    }
    result.purity = Purity(labels, g);
    result.ari = AdjustedRandIndex(labels, std::span<const std::string>(g));
  }
  return result;
}

nlohmann::json ToJson(const ClusterResult& result) {
  nlohmann::json j = {{"k", result.k}, {"labels", result.labels}};
  j["purity"] = result.purity ? nlohmann::json(*result.purity) : nlohmann::json(nullptr);
  j["ari"] = result.ari ? nlohmann::json(*result.ari) : nlohmann::json(nullptr);
  return j;
}

}  // namespace semmem::cluster
