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
#include <cmath>

#include "semmem/error.hpp"
#include "semmem/reference.hpp"

namespace semmem::reference {

activation::ActivationState Propagate(const SemanticNetwork& net, const std::map<ConceptId, double>& seeds,
                                      const activation::ActivationConfig& cfg) {
  activation::ActivationState state = activation::SeedState(net, seeds, cfg);
  const std::size_t n = net.size();
  std::vector<double> next(n, 0.0);
  for (int step = 0; step < cfg.max_iter; ++step) {
    double delta = 0.0;
    for (ConceptIndex i = 0; i < n; ++i) {
      const auto in = net.InEdges(i);
      const double indeg = static_cast<double>(in.size());
      double input = 0.0;
      for (const Edge& e : in) {
        const double outdeg = static_cast<double>(net.OutDegree(e.source));
        const double sign = e.polarity == Polarity::kExcitatory ? 1.0 : -1.0;
        input += (sign * e.weight / std::sqrt(outdeg * indeg)) * state.values[e.source];
      }
      double a = cfg.decay * state.values[i] + cfg.gain * input;
      if (cfg.sustain_seeds) a += (1.0 - cfg.decay) * state.seeds[i];
      if (!std::isfinite(a)) throw Error(ErrorCode::kNumeric, "non-finite activation during propagation");
      a = std::clamp(a, 0.0, cfg.a_max);
      if (a < cfg.threshold) a = 0.0;
      next[i] = a;
      delta = std::max(delta, std::abs(a - state.values[i]));
    }
    state.values.swap(next);
    ++state.iteration;
    if (delta < cfg.tol) {
      state.converged = true;
      break;
    }
  }
  return state;
}

}  // namespace semmem::reference
