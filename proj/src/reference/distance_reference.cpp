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


#include <algorithm>

#include "semmem/reference.hpp"

namespace semmem::reference {

cluster::DistanceMatrix CosineDistances(std::span<const cluster::SparseVector> vectors) {
  const std::size_t n = vectors.size();
  cluster::DistanceMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dot = 0.0;
      auto a = vectors[i].begin();
      auto b = vectors[j].begin();
      while (a != vectors[i].end() && b != vectors[j].end()) {
        if (a->first < b->first) {
          ++a;
        } else if (b->first < a->first) {
          ++b;
        } else {
          dot += a->second * b->second;
          ++a;
          ++b;
        }
      }
      d.Set(i, j, std::max(0.0, 1.0 - dot));
    }
  }
  return d;
}

}  // namespace semmem::reference
