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

#ifndef SEMMEM_CLUSTER_HPP_
#define SEMMEM_CLUSTER_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace semmem::cluster {

using SparseVector = std::map<std::string, double>;

struct DocumentPoint {
  std::string doc_id;
  SparseVector vector;  // unit length
};

// Dense symmetric matrix with a zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  // Writes both (i, j) and (j, i).
  void Set(std::size_t i, std::size_t j, double value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }
  std::span<const double> data() const { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

// 1 - cosine between unit vectors, clamped at 0. Rows are filled in
// parallel; each entry is computed independently, so the result does not
// depend on the thread count.
DistanceMatrix CosineDistances(std::span<const SparseVector> vectors);

// Average-link agglomeration down to k clusters. Ties merge the pair with
// the smallest (i, j); the merged cluster keeps index i. Returns a cluster
// label per row, numbered by first appearance.
std::vector<int> AverageLinkage(const DistanceMatrix& distances, int k);

double Purity(std::span<const int> clusters, std::span<const std::string> gold);
double AdjustedRandIndex(std::span<const int> a, std::span<const int> b);
double AdjustedRandIndex(std::span<const int> clusters, std::span<const std::string> gold);

struct ClusterResult {
  std::vector<std::string> doc_ids;  // sorted; row order of `distances`
  std::map<std::string, int> labels;
  int k = 0;
  std::optional<double> purity;
  std::optional<double> ari;
  DistanceMatrix distances;
};

// Points are ordered by doc id before clustering, so the partition does not
// depend on input order. Throws kInvalidArgument when k is not in [1, n].
ClusterResult ClusterDocuments(std::span<const DocumentPoint> points, int k,
                               const std::map<std::string, std::string>* gold = nullptr);

nlohmann::json ToJson(const ClusterResult& result);

}  // namespace semmem::cluster

#endif  // SEMMEM_CLUSTER_HPP_
