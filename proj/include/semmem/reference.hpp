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


#ifndef SEMMEM_REFERENCE_HPP_
#define SEMMEM_REFERENCE_HPP_

// Single-threaded reference versions of the parallel kernels. Tests compare
// them with the production code; the benchmark times both.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "semmem/activation.hpp"
#include "semmem/cluster.hpp"
#include "semmem/ontology.hpp"
#include "semmem/text_pipeline.hpp"
#include "semmem/wsd.hpp"

namespace semmem::reference {

// Works straight off the network's in-edge lists; same summation order as
// the parallel kernel, so results are bit-identical.
activation::ActivationState Propagate(const SemanticNetwork& net, const std::map<ConceptId, double>& seeds,
                                      const activation::ActivationConfig& cfg);

// Pairwise 1 - <u, v> by ordered key merge, floored at 0.
cluster::DistanceMatrix CosineDistances(std::span<const cluster::SparseVector> vectors);

// Scans synset member lists directly instead of the concept index.
wsd::SynsetCountTable BuildReferenceCounts(std::span<const std::string> reference,
                                           const wsd::SynsetInventory& synsets, const SemanticNetwork& net,
                                           const text::StopList& stoplist,
                                           const wsd::ReferenceOptions& options = {});

}  // namespace semmem::reference

#endif  // SEMMEM_REFERENCE_HPP_
