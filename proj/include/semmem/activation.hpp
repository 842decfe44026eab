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

#ifndef SEMMEM_ACTIVATION_HPP_
#define SEMMEM_ACTIVATION_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "json.hpp"
#include "semmem/ontology.hpp"

namespace semmem::activation {

// Sparse snapshot of an activation pattern: coefficients over the concept
// basis, nonzero entries only.
using ActivationVector = std::map<ConceptId, double>;

struct ActivationConfig {
  double decay = 0.7;
  double gain = 0.6;
  double threshold = 1e-3;
  double a_max = 1.0;
  double tol = 1e-6;
  int max_iter = 500;
  // Seeds keep feeding the nodes they started on: each step adds
  // (1 - decay) * seed, so a lone seeded node holds its seed value.
  bool sustain_seeds = false;

  // Throws Error(kInvalidArgument). decay may be 1 and gain 0 (identity and
  // decay-only runs).
  void Validate() const;
  nlohmann::json ToJson() const;
  // Missing fields keep their defaults.
  static ActivationConfig FromJson(const nlohmann::json& j);
};

// Dense activations aligned with the network's concept indices.
struct ActivationState {
  std::vector<double> values;
  std::vector<double> seeds;  // initial values; external input when sustained
  int iteration = 0;
  bool converged = false;

  double at(ConceptIndex i) const { return values[i]; }
};

// Incoming coefficients pol * w_ji / sqrt(outdeg(j) * indeg(i)) laid out
// per target in CSR form. Build once per network and reuse.
class PropagationPlan {
 public:
  explicit PropagationPlan(const SemanticNetwork& net);

  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const ConceptIndex> sources(std::size_t target) const {
    return std::span<const ConceptIndex>(sources_).subspan(offsets_[target],
                                                           offsets_[target + 1] - offsets_[target]);
  }
  std::span<const double> coefficients(std::size_t target) const {
    return std::span<const double>(coefs_).subspan(offsets_[target],
                                                   offsets_[target + 1] - offsets_[target]);
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<ConceptIndex> sources_;
  std::vector<double> coefs_;
};

// One synchronous (Jacobi) update of every node: decay, weighted input,
// clamp to [0, a_max], zero below threshold. Parallel over nodes; each node
// sums its inputs in a fixed order, so results do not depend on the thread
// count. Returns max |next - current|.
// `input` is empty or holds one external input per node.
double PropagateStep(const PropagationPlan& plan, const ActivationConfig& cfg,
                     std::span<const double> current, std::span<double> next,
                     std::span<const double> input = {});

using StepObserver = std::function<void(int iteration, std::span<const double> values)>;

// Seeds must lie in (0, a_max] and name existing concepts (Error(kNotFound)
// otherwise).
ActivationState SeedState(const SemanticNetwork& net, const std::map<ConceptId, double>& seeds,
                          const ActivationConfig& cfg);

ActivationState Propagate(const SemanticNetwork& net, const std::map<ConceptId, double>& seeds,
                          const ActivationConfig& cfg, const StepObserver& observer = {});
// Continues iterating from `state`; `state.iteration` keeps counting.
ActivationState Propagate(const PropagationPlan& plan, ActivationState state,
                          const ActivationConfig& cfg, const StepObserver& observer = {});

ActivationVector Snapshot(const SemanticNetwork& net, const ActivationState& state);

// Dot product under an orthonormal concept basis.
double Overlap(const ActivationVector& u, const ActivationVector& v);

// Keeps the most active group member (ties: smallest id) and scales the
// rest by kappa in [0, 1]. kappa = 0 is winner-takes-all.
ActivationState WinnerTakeMost(const SemanticNetwork& net, ActivationState state,
                               const std::set<ConceptId>& group, double kappa);

nlohmann::json VectorToJson(const ActivationVector& v);
ActivationVector VectorFromJson(const nlohmann::json& j);

}  // namespace semmem::activation

#endif  // SEMMEM_ACTIVATION_HPP_
