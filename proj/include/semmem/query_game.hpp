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

#ifndef SEMMEM_QUERY_GAME_HPP_
#define SEMMEM_QUERY_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "semmem/ontology.hpp"

namespace semmem::game {

enum class Answer { kYes, kNo, kUnknown };

std::optional<Answer> ParseAnswer(std::string_view text);
std::string_view AnswerName(Answer answer);

struct FeatureInfo {
  std::string id;
  std::string question_text;
};

using Fact = std::pair<std::string, double>;  // (feature id, p_yes)

// Concept x feature matrix of P(a knowledgeable answerer says yes).
class KnowledgeMatrix {
 public:
  KnowledgeMatrix() = default;
  // Throws kInvalidArgument on shape mismatch, duplicate ids or values
  // outside [0, 1].
  KnowledgeMatrix(std::vector<ConceptId> concepts, std::vector<FeatureInfo> features,
                  std::vector<std::vector<double>> p_yes);

  // {"concepts":[...], "features":[{"id","question_text"}], "p_yes":[[...]]}
  static KnowledgeMatrix FromJson(const nlohmann::json& j);
  static KnowledgeMatrix Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;

  // One feature per excitatory (relation_type, target) pair; p_yes is 1
  // where the concept has that edge and 0 otherwise. Concepts without any
  // excitatory out-edge are left out.
  static KnowledgeMatrix FromNetwork(const SemanticNetwork& net);

  std::size_t num_concepts() const { return concepts_.size(); }
  std::size_t num_features() const { return features_.size(); }
  const ConceptId& concept_id(std::size_t i) const { return concepts_[i]; }
  const FeatureInfo& feature(std::size_t j) const { return features_[j]; }
  std::span<const ConceptId> concepts() const { return concepts_; }
  double p_yes(std::size_t concept_index, std::size_t feature_index) const {
    return p_[concept_index * features_.size() + feature_index];
  }
  std::optional<std::size_t> FindConcept(std::string_view id) const;
  std::optional<std::size_t> FindFeature(std::string_view id) const;
  std::uint64_t version() const { return version_; }

  // Adds the concept and any unknown features as needed (new cells start at
  // 0.5, i.e. no information), overwrites the given entries and bumps the
  // version.
  KnowledgeMatrix Teach(std::string_view concept_id, std::span<const Fact> facts) const;

 private:
  std::vector<ConceptId> concepts_;
  std::vector<FeatureInfo> features_;
  std::vector<double> p_;  // row-major concepts x features
  std::uint64_t version_ = 0;
};

// Probability over the matrix concepts, aligned with concept indices.
struct Posterior {
  std::vector<double> probs;

  static Posterior Uniform(std::size_t n);
  double Sum() const;
};

// P(answer = yes | concept) under symmetric answer noise epsilon.
double YesLikelihood(double p_yes, double epsilon);

// Expected entropy reduction, in bits, from asking `feature`. `masses` need
// not be normalized. Zero exactly when the feature cannot split the
// support.
double ExpectedGain(std::span<const double> masses, const KnowledgeMatrix& kb, std::size_t feature,
                    double epsilon);

struct QuestionChoice {
  std::size_t feature = 0;
  double gain = 0.0;
};

// Argmax of ExpectedGain over non-excluded features; gains within 1e-12 of
// each other tie and go to the smallest feature id. Throws kExhausted.
QuestionChoice BestQuestion(std::span<const double> masses, const KnowledgeMatrix& kb,
                            const std::set<std::size_t>& excluded, double epsilon);

struct UpdateResult {
  Posterior posterior;
  bool contradiction = false;  // all mass eliminated; reset to uniform
};

UpdateResult UpdatePosterior(const Posterior& prior, const KnowledgeMatrix& kb, std::size_t feature,
                             Answer answer, double epsilon);

// Most probable concept; ties go to the smallest concept id.
std::size_t ArgmaxConcept(const Posterior& posterior, const KnowledgeMatrix& kb);

struct SessionConfig {
  int budget = 20;
  double guess_threshold = 0.9;
  double epsilon = 0.0;
  std::uint64_t seed = 0;

  void Validate() const;
  nlohmann::json ToJson() const;
  static SessionConfig FromJson(const nlohmann::json& j);
};

enum class SessionState { kAsking, kGuessed, kDone };
std::string_view StateName(SessionState state);

struct TranscriptEntry {
  std::string feature;
  std::string question;
  double gain = 0.0;
  std::optional<Answer> answer;
  bool contradiction = false;
};

// One 20-questions dialogue. States only move forward:
// asking -> guessed -> done.
class Session {
 public:
  Session(std::string id, KnowledgeMatrix kb, SessionConfig config);

  const std::string& id() const { return id_; }
  const SessionConfig& config() const { return config_; }
  const KnowledgeMatrix& knowledge() const { return kb_; }
  const Posterior& posterior() const { return posterior_; }
  SessionState state() const { return state_; }
  int budget() const { return budget_; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  // Feature index awaiting an answer (asking state only).
  std::optional<std::size_t> pending() const { return pending_; }
  std::optional<std::size_t> guess() const { return guess_; }

  // Answers the pending question, then selects the next one or guesses.
  // Throws kConflict when not asking.
  void Submit(Answer answer);
  // Teach-back; moves the session to done.
  void Teach(std::string_view concept_id, std::span<const Fact> facts);

  // Top entries by probability (ties: smaller id first).
  std::vector<std::pair<ConceptId, double>> Top(std::size_t n) const;
  nlohmann::json ToJson(std::size_t top_n = 10) const;

 private:
  void Advance();

  std::string id_;
  KnowledgeMatrix kb_;
  SessionConfig config_;
  Posterior posterior_;
  SessionState state_ = SessionState::kAsking;
  int budget_;
  std::set<std::size_t> asked_;
  std::vector<TranscriptEntry> transcript_;
  std::optional<std::size_t> pending_;
  std::optional<std::size_t> guess_;
};

using Oracle = std::function<Answer(std::size_t feature)>;

// Answers from the row of `target`: yes with probability p_yes, then flipped
// with probability epsilon. Uses mt19937_64 seeded with `seed`; uniforms are
// (draw >> 11) * 2^-53.
Oracle SimulatedOracle(const KnowledgeMatrix& kb, std::size_t target, double epsilon,
                       std::uint64_t seed);

struct SessionResult {
  ConceptId guess;
  std::size_t questions = 0;
  std::vector<TranscriptEntry> transcript;
};

SessionResult RunSession(const KnowledgeMatrix& kb, const Oracle& oracle, const SessionConfig& config);

}  // namespace semmem::game

#endif  // SEMMEM_QUERY_GAME_HPP_
