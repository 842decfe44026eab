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

#include "semmem/activation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "semmem/error.hpp"

namespace semmem::activation {

void ActivationConfig::Validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (!(decay >= 0.0 && decay <= 1.0)) bad("decay must lie in [0, 1]");
  if (!(gain >= 0.0) || !std::isfinite(gain)) bad("gain must be finite and >= 0");
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) bad("threshold must be >= 0");
  if (!(a_max > 0.0) || !std::isfinite(a_max)) bad("a_max must be > 0");
  if (!(tol > 0.0)) bad("tol must be > 0");
  if (max_iter < 1) bad("max_iter must be positive");
}

nlohmann::json ActivationConfig::ToJson() const {
  return {{"decay", decay}, {"gain", gain}, {"threshold", threshold}, {"a_max", a_max},
          {"tol", tol},     {"max_iter", max_iter}, {"sustain_seeds", sustain_seeds}};
}

ActivationConfig ActivationConfig::FromJson(const nlohmann::json& j) {
  ActivationConfig cfg;
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "activation config must be an object");
  cfg.decay = j.value("decay", cfg.decay);
  cfg.gain = j.value("gain", cfg.gain);
  cfg.threshold = j.value("threshold", cfg.threshold);
  cfg.a_max = j.value("a_max", cfg.a_max);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.max_iter = j.value("max_iter", cfg.max_iter);
  cfg.sustain_seeds = j.value("sustain_seeds", cfg.sustain_seeds);
  cfg.Validate();
  return cfg;
}

PropagationPlan::PropagationPlan(const SemanticNetwork& net) {
  const std::size_t n = net.size();
  offsets_.assign(n + 1, 0);
  for (ConceptIndex i = 0; i < n; ++i) {
    auto in = net.InEdges(i);
    offsets_[i + 1] = offsets_[i] + in.size();
    const double indeg = static_cast<double>(in.size());
    for (const Edge& e : in) {
      const double outdeg = static_cast<double>(net.OutDegree(e.source));
      const double sign = e.polarity == Polarity::kExcitatory ? 1.0 : -1.0;
      sources_.push_back(e.source);
      coefs_.push_back(sign * e.weight / std::sqrt(outdeg * indeg));
    }
  }
}

double PropagateStep(const PropagationPlan& plan, const ActivationConfig& cfg,
                     std::span<const double> current, std::span<double> next,
                     std::span<const double> input) {
  const bool sustained = !input.empty();
  const double leak = 1.0 - cfg.decay;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(plan.size());
  double max_delta = 0.0;
  bool finite = true;
#pragma omp parallel for schedule(static) reduction(max : max_delta) reduction(&& : finite)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto src = plan.sources(static_cast<std::size_t>(i));
    auto coef = plan.coefficients(static_cast<std::size_t>(i));
    double in = 0.0;
    for (std::size_t k = 0; k < src.size(); ++k) in += coef[k] * current[src[k]];
    double a = cfg.decay * current[i] + cfg.gain * in;
    if (sustained) a += leak * input[i];
    finite = finite && std::isfinite(a);
    a = std::clamp(a, 0.0, cfg.a_max);
    if (a < cfg.threshold) a = 0.0;
    next[i] = a;
    max_delta = std::max(max_delta, std::abs(a - current[i]));
  }
  if (!finite) throw Error(ErrorCode::kNumeric, "non-finite activation during propagation");
  return max_delta;
}

ActivationState SeedState(const SemanticNetwork& net, const std::map<ConceptId, double>& seeds,
                          const ActivationConfig& cfg) {
  cfg.Validate();
  ActivationState state;
  state.values.assign(net.size(), 0.0);
  for (const auto& [id, value] : seeds) {
    ConceptIndex idx = net.Require(id);
    if (!(value > 0.0 && value <= cfg.a_max)) {
      std::ostringstream os;
      os << "seed for '" << id << "' must lie in (0, " << cfg.a_max << "], got " << value;
      throw Error(ErrorCode::kInvalidArgument, os.str());
    }
    state.values[idx] = value;
  }
  state.seeds = state.values;
  return state;
}

ActivationState Propagate(const PropagationPlan& plan, ActivationState state,
                          const ActivationConfig& cfg, const StepObserver& observer) {
  cfg.Validate();
  if (!state.seeds.empty() && state.seeds.size() != state.values.size()) {
    throw Error(ErrorCode::kInvalidArgument, "seed vector does not match the state size");
  }
  std::vector<double> next(state.values.size(), 0.0);
  state.converged = false;
  for (int step = 0; step < cfg.max_iter; ++step) {
    const std::span<const double> input = cfg.sustain_seeds && !state.seeds.empty()
                                              ? std::span<const double>(state.seeds)
                                              : std::span<const double>();
    double delta = PropagateStep(plan, cfg, state.values, next, input);
    state.values.swap(next);
    ++state.iteration;
    if (observer) observer(state.iteration, state.values);
    if (delta < cfg.tol) {
      state.converged = true;
      break;
    }
  }
  return state;
}

ActivationState Propagate(const SemanticNetwork& net, const std::map<ConceptId, double>& seeds,
                          const ActivationConfig& cfg, const StepObserver& observer) {
  ActivationState state = SeedState(net, seeds, cfg);
  PropagationPlan plan(net);
  return Propagate(plan, std::move(state), cfg, observer);
}

ActivationVector Snapshot(const SemanticNetwork& net, const ActivationState& state) {
  ActivationVector out;
  for (ConceptIndex i = 0; i < state.values.size(); ++i) {
    if (state.values[i] != 0.0) out.emplace(net.id_at(i), state.values[i]);
  }
  return out;
}

double Overlap(const ActivationVector& u, const ActivationVector& v) {
  const ActivationVector& small = u.size() <= v.size() ? u : v;
  const ActivationVector& large = u.size() <= v.size() ? v : u;
  double sum = 0.0;
  for (const auto& [id, a] : small) {
    auto it = large.find(id);
    if (it != large.end()) sum += a * it->second;
  }
  return sum;
}

ActivationState WinnerTakeMost(const SemanticNetwork& net, ActivationState state,
                               const std::set<ConceptId>& group, double kappa) {
  if (group.empty()) throw Error(ErrorCode::kInvalidArgument, "competition group is empty");
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kappa must lie in [0, 1]");
  }
  std::vector<ConceptIndex> members;
  for (const ConceptId& id : group) members.push_back(net.Require(id));
  // Indices follow id order, so the first maximum is the smallest id.
  std::sort(members.begin(), members.end());
  ConceptIndex winner = members.front();
  for (ConceptIndex m : members) {
    if (state.values[m] > state.values[winner]) winner = m;
  }
  for (ConceptIndex m : members) {
    if (m != winner) state.values[m] *= kappa;
  }
  return state;
}

nlohmann::json VectorToJson(const ActivationVector& v) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [id, value] : v) j[id] = value;
  return j;
}

ActivationVector VectorFromJson(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "activation vector must be a JSON object");
  ActivationVector v;
  for (const auto& [id, value] : j.items()) {
    if (!value.is_number()) throw Error(ErrorCode::kParse, "non-numeric coefficient for " + id);
    double x = value.get<double>();
    if (!std::isfinite(x)) throw Error(ErrorCode::kParse, "non-finite coefficient for " + id);
    if (x != 0.0) v[id] = x;
  }
  return v;
}

}  // namespace semmem::activation
