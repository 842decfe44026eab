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

#ifndef SEMMEM_MDS_HPP_
#define SEMMEM_MDS_HPP_

#include <cstddef>
#include <vector>

#include "semmem/cluster.hpp"

namespace semmem::mds {

struct PowerIterationOptions {
  double tol = 1e-10;  // relative change of the Rayleigh quotient
  int max_iter = 1000;
};

struct Embedding {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> coords;       // row-major n x dim
  std::vector<double> eigenvalues;  // before clipping, descending by discovery

  double at(std::size_t i, std::size_t d) const { return coords[i * dim + d]; }
};

// Classical (Torgerson) scaling: B = -1/2 J D^2 J, top `dim` eigenpairs by
// power iteration with deflation, negative eigenvalues clipped to zero,
// coordinates u * sqrt(lambda), columns centered. Throws kInvalidArgument
// unless 1 <= dim <= max(n - 1, 1), and kNumeric naming the eigen index when
// an eigenpair does not converge.
Embedding ClassicalMds(const cluster::DistanceMatrix& distances, std::size_t dim,
                       const PowerIterationOptions& options = {});

}  // namespace semmem::mds

#endif  // SEMMEM_MDS_HPP_
