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

#include "semmem/query_game.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "semmem/error.hpp"

namespace semmem::game {
namespace {

void CheckProbability(double v, const std::string& where) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, where + ": p_yes must lie in [0, 1]");
  }
}

}  // namespace

std::optional<Answer> ParseAnswer(std::string_view text) {
  if (text == "yes" || text == "y") return Answer::kYes;
  if (text == "no" || text == "n") return Answer::kNo;
  if (text == "unknown" || text == "u") return Answer::kUnknown;
  return std::nullopt;
}

std::string_view AnswerName(Answer answer) {
  switch (answer) {
    case Answer::kYes: return "yes";
    case Answer::kNo: return "no";
    case Answer::kUnknown: return "unknown";
  }
  return "unknown";
}

KnowledgeMatrix::KnowledgeMatrix(std::vector<ConceptId> concepts, std::vector<FeatureInfo> features,
                                 std::vector<std::vector<double>> p_yes)
    : concepts_(std::move(concepts)), features_(std::move(features)) {
  if (p_yes.size() != concepts_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "p_yes needs one row per concept");
  }
  std::set<std::string> seen;
  for (const auto& c : concepts_) {
    if (c.empty() || !seen.insert(c).second) {
      throw Error(ErrorCode::kInvalidArgument, "empty or duplicate concept '" + c + "'");
    }
  }
  seen.clear();
  for (const auto& f : features_) {
    if (f.id.empty() || !seen.insert(f.id).second) {
      throw Error(ErrorCode::kInvalidArgument, "empty or duplicate feature '" + f.id + "'");
    }
  }
  p_.reserve(concepts_.size() * features_.size());
  for (std::size_t i = 0; i < p_yes.size(); ++i) {
    if (p_yes[i].size() != features_.size()) {
      throw Error(ErrorCode::kInvalidArgument, "p_yes row for '" + concepts_[i] + "' has wrong length");
    }
    for (double v : p_yes[i]) {
      CheckProbability(v, concepts_[i]);
      p_.push_back(v);
    }
  }
}

KnowledgeMatrix KnowledgeMatrix::FromJson(const nlohmann::json& j) {
  try {
    std::vector<ConceptId> concepts = j.at("concepts").get<std::vector<ConceptId>>();
    std::vector<FeatureInfo> features;
    for (const auto& f : j.at("features")) {
      if (f.is_string()) {
        features.push_back(FeatureInfo{f.get<std::string>(), f.get<std::string>()});
      } else {
        std::string id = f.at("id").get<std::string>();
        features.push_back(FeatureInfo{id, f.value("question_text", id)});
      }
    }
    auto p = j.at("p_yes").get<std::vector<std::vector<double>>>();
    KnowledgeMatrix kb(std::move(concepts), std::move(features), std::move(p));
    kb.version_ = j.value("version", std::uint64_t{0});
    return kb;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("knowledge matrix: ") + e.what());
  }
}

KnowledgeMatrix KnowledgeMatrix::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open knowledge matrix " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
  return FromJson(j);
}

nlohmann::json KnowledgeMatrix::ToJson() const {
  nlohmann::json features = nlohmann::json::array();
  for (const auto& f : features_) features.push_back({{"id", f.id}, {"question_text", f.question_text}});
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t f = 0; f < features_.size(); ++f) row.push_back(p_yes(i, f));
    rows.push_back(std::move(row));
  }
  return {{"concepts", concepts_}, {"features", std::move(features)}, {"p_yes", std::move(rows)},
          {"version", version_}};
}

KnowledgeMatrix KnowledgeMatrix::FromNetwork(const SemanticNetwork& net) {
  std::map<std::pair<std::string, semmem::ConceptIndex>, std::size_t> feature_index;
  std::vector<semmem::ConceptIndex> sources;
  for (semmem::ConceptIndex c = 0; c < net.size(); ++c) {
    bool any = false;
    for (const Edge& e : net.OutEdges(c)) {
      if (e.polarity != Polarity::kExcitatory) continue;
      feature_index.emplace(std::pair{e.relation_type, e.target}, 0);
      any = true;
    }
    if (any) sources.push_back(c);
  }
  std::vector<FeatureInfo> features;
  for (auto& [key, idx] : feature_index) {
    idx = features.size();
    const Concept& target = net.concept_at(key.second);
    features.push_back(FeatureInfo{key.first + ":" + target.id,
                                   "Is it linked by '" + key.first + "' to '" + target.preferred_name + "'?"});
  }
  std::vector<ConceptId> concepts;
  std::vector<std::vector<double>> rows;
  for (semmem::ConceptIndex c : sources) {
    concepts.push_back(net.id_at(c));
    std::vector<double> row(features.size(), 0.0);
    for (const Edge& e : net.OutEdges(c)) {
      if (e.polarity == Polarity::kExcitatory) row[feature_index.at({e.relation_type, e.target})] = 1.0;
    }
    rows.push_back(std::move(row));
  }
  return KnowledgeMatrix(std::move(concepts), std::move(features), std::move(rows));
}

std::optional<std::size_t> KnowledgeMatrix::FindConcept(std::string_view id) const {
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    if (concepts_[i] == id) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> KnowledgeMatrix::FindFeature(std::string_view id) const {
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (features_[i].id == id) return i;
  }
  return std::nullopt;
}

KnowledgeMatrix KnowledgeMatrix::Teach(std::string_view concept_id, std::span<const Fact> facts) const {
  if (concept_id.empty()) throw Error(ErrorCode::kInvalidArgument, "teach needs a concept id");
  for (const auto& [feature, value] : facts) {
    if (feature.empty()) throw Error(ErrorCode::kInvalidArgument, "teach fact has an empty feature id");
    CheckProbability(value, std::string(concept_id));
  }
  KnowledgeMatrix out;
  out.concepts_ = concepts_;
  out.features_ = features_;
  for (const auto& [feature, value] : facts) {
    if (!out.FindFeature(feature)) out.features_.push_back(FeatureInfo{feature, feature});
  }
  std::optional<std::size_t> row = FindConcept(concept_id);
  if (!row) {
    out.concepts_.emplace_back(concept_id);
    row = out.concepts_.size() - 1;
  }
  const std::size_t nf = out.features_.size();
  out.p_.assign(out.concepts_.size() * nf, 0.5);
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    for (std::size_t f = 0; f < features_.size(); ++f) out.p_[i * nf + f] = p_yes(i, f);
  }
  for (const auto& [feature, value] : facts) {
    out.p_[*row * nf + *out.FindFeature(feature)] = value;
  }
  out.version_ = version_ + 1;
  return out;
}

Posterior Posterior::Uniform(std::size_t n) {
  Posterior p;
  p.probs.assign(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return p;
}

double Posterior::Sum() const {
  double s = 0.0;
  for (double x : probs) s += x;
  return s;
}

double YesLikelihood(double p_yes, double epsilon) {
  return (1.0 - epsilon) * p_yes + epsilon * (1.0 - p_yes);
}

double ExpectedGain(std::span<const double> masses, const KnowledgeMatrix& kb, std::size_t feature,
                    double epsilon) {
  double total = 0.0;
  for (double m : masses) total += m;
  if (!(total > 0.0)) return 0.0;

  // Constant likelihood over the support: the answer carries no information.
  bool constant = true;
  double first = -1.0;
  for (std::size_t c = 0; c < masses.size(); ++c) {
    if (masses[c] <= 0.0) continue;
    double q = YesLikelihood(kb.p_yes(c, feature), epsilon);
    if (first < 0.0) {
      first = q;
    } else if (q != first) {
      constant = false;
      break;
    }
  }
  if (constant) return 0.0;

  // Mutual information between concept and answer.
  double p_yes = 0.0;
  for (std::size_t c = 0; c < masses.size(); ++c) {
    p_yes += masses[c] / total * YesLikelihood(kb.p_yes(c, feature), epsilon);
  }
  const double p_no = 1.0 - p_yes;
  double gain = 0.0;
  for (std::size_t c = 0; c < masses.size(); ++c) {
    if (masses[c] <= 0.0) continue;
    const double pc = masses[c] / total;
    const double q = YesLikelihood(kb.p_yes(c, feature), epsilon);
    if (q > 0.0) gain += pc * q * std::log2(q / p_yes);
    if (q < 1.0) gain += pc * (1.0 - q) * std::log2((1.0 - q) / p_no);
  }
  return std::max(0.0, gain);
}

QuestionChoice BestQuestion(std::span<const double> masses, const KnowledgeMatrix& kb,
                            const std::set<std::size_t>& excluded, double epsilon) {
  std::optional<QuestionChoice> best;
  for (std::size_t f = 0; f < kb.num_features(); ++f) {
    if (excluded.contains(f)) continue;
    const double g = ExpectedGain(masses, kb, f, epsilon);
    if (!best) {
      best = QuestionChoice{f, g};
      continue;
    }
    const bool tie = std::abs(g - best->gain) <= 1e-12;
    if ((!tie && g > best->gain) || (tie && kb.feature(f).id < kb.feature(best->feature).id)) {
      best = QuestionChoice{f, g};
    }
  }
  if (!best) throw Error(ErrorCode::kExhausted, "every feature has already been asked");
  return *best;
}

UpdateResult UpdatePosterior(const Posterior& prior, const KnowledgeMatrix& kb, std::size_t feature,
                             Answer answer, double epsilon) {
  if (feature >= kb.num_features()) throw Error(ErrorCode::kNotFound, "unknown feature index");
  UpdateResult out;
  if (answer == Answer::kUnknown) {
    out.posterior = prior;
    return out;
  }
  out.posterior.probs.resize(prior.probs.size());
  double total = 0.0;
  for (std::size_t c = 0; c < prior.probs.size(); ++c) {
    double q = YesLikelihood(kb.p_yes(c, feature), epsilon);
    double like = answer == Answer::kYes ? q : 1.0 - q;
    out.posterior.probs[c] = prior.probs[c] * like;
    total += out.posterior.probs[c];
  }
  if (!(total > 0.0)) {
    out.posterior = Posterior::Uniform(prior.probs.size());
    out.contradiction = true;
    return out;
  }
  for (double& p : out.posterior.probs) p /= total;
  return out;
}

std::size_t ArgmaxConcept(const Posterior& posterior, const KnowledgeMatrix& kb) {
  if (posterior.probs.empty()) throw Error(ErrorCode::kInvalidArgument, "empty posterior");
  std::size_t best = 0;
  for (std::size_t c = 1; c < posterior.probs.size(); ++c) {
    const double p = posterior.probs[c];
    if (p > posterior.probs[best] || (p == posterior.probs[best] && kb.concept_id(c) < kb.concept_id(best))) {
      best = c;
    }
  }
  return best;
}

void SessionConfig::Validate() const {
  if (budget < 0) throw Error(ErrorCode::kInvalidArgument, "budget must be >= 0");
  if (!(guess_threshold > 0.0 && guess_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "guess_threshold must lie in (0, 1]");
  }
  if (!(epsilon >= 0.0 && epsilon < 0.5)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in [0, 0.5)");
  }
}

nlohmann::json SessionConfig::ToJson() const {
  return {{"budget", budget}, {"guess_threshold", guess_threshold}, {"epsilon", epsilon}, {"seed", seed}};
}

SessionConfig SessionConfig::FromJson(const nlohmann::json& j) {
  SessionConfig c;
  if (j.is_null()) return c;
  try {
    c.budget = j.value("budget", c.budget);
    c.guess_threshold = j.value("guess_threshold", c.guess_threshold);
    c.epsilon = j.value("epsilon", c.epsilon);
    c.seed = j.value("seed", c.seed);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("session config: ") + e.what());
  }
  c.Validate();
  return c;
}

std::string_view StateName(SessionState state) {
  switch (state) {
    case SessionState::kAsking: return "asking";
    case SessionState::kGuessed: return "guessed";
    case SessionState::kDone: return "done";
  }
  return "done";
}

Session::Session(std::string id, KnowledgeMatrix kb, SessionConfig config)
    : id_(std::move(id)), kb_(std::move(kb)), config_(config), budget_(config.budget) {
  config_.Validate();
  if (kb_.num_concepts() == 0) throw Error(ErrorCode::kInvalidArgument, "knowledge matrix has no concepts");
  posterior_ = Posterior::Uniform(kb_.num_concepts());
  Advance();
}

void Session::Advance() {
  const double top = *std::max_element(posterior_.probs.begin(), posterior_.probs.end());
  const bool exhausted = asked_.size() >= kb_.num_features();
  if (top >= config_.guess_threshold || budget_ <= 0 || exhausted) {
    pending_.reset();
    guess_ = ArgmaxConcept(posterior_, kb_);
    state_ = SessionState::kGuessed;
    return;
  }
  QuestionChoice q = BestQuestion(posterior_.probs, kb_, asked_, config_.epsilon);
  pending_ = q.feature;
  transcript_.push_back(TranscriptEntry{kb_.feature(q.feature).id, kb_.feature(q.feature).question_text,
                                        q.gain, std::nullopt, false});
}

void Session::Submit(Answer answer) {
  if (state_ != SessionState::kAsking || !pending_) {
    throw Error(ErrorCode::kConflict, "session '" + id_ + "' is not waiting for an answer");
  }
  UpdateResult r = UpdatePosterior(posterior_, kb_, *pending_, answer, config_.epsilon);
  posterior_ = std::move(r.posterior);
  transcript_.back().answer = answer;
  transcript_.back().contradiction = r.contradiction;
  asked_.insert(*pending_);
  --budget_;
  pending_.reset();
  Advance();
}

void Session::Teach(std::string_view concept_id, std::span<const Fact> facts) {
  kb_ = kb_.Teach(concept_id, facts);
  // A new concept enters with zero probability; the posterior still sums to 1.
  posterior_.probs.resize(kb_.num_concepts(), 0.0);
  if (state_ == SessionState::kAsking) {
    pending_.reset();
    if (!transcript_.empty() && !transcript_.back().answer) transcript_.pop_back();
    guess_ = ArgmaxConcept(posterior_, kb_);
  }
  state_ = SessionState::kDone;
}

std::vector<std::pair<ConceptId, double>> Session::Top(std::size_t n) const {
  std::vector<std::size_t> idx(posterior_.probs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (posterior_.probs[a] != posterior_.probs[b]) return posterior_.probs[a] > posterior_.probs[b];
    return kb_.concept_id(a) < kb_.concept_id(b);
  });
  std::vector<std::pair<ConceptId, double>> out;
  for (std::size_t i = 0; i < idx.size() && i < n; ++i) {
    out.emplace_back(kb_.concept_id(idx[i]), posterior_.probs[idx[i]]);
  }
  return out;
}

nlohmann::json Session::ToJson(std::size_t top_n) const {
  nlohmann::json top = nlohmann::json::array();
  for (const auto& [id, p] : Top(top_n)) top.push_back({{"concept", id}, {"p", p}});
  nlohmann::json transcript = nlohmann::json::array();
  for (const auto& t : transcript_) {
    nlohmann::json e = {{"feature", t.feature}, {"question", t.question}, {"gain", t.gain},
                        {"contradiction", t.contradiction}};
    e["answer"] = t.answer ? nlohmann::json(AnswerName(*t.answer)) : nlohmann::json(nullptr);
    transcript.push_back(std::move(e));
  }
  nlohmann::json j = {{"session_id", id_},
                      {"state", StateName(state_)},
                      {"budget", budget_},
                      {"posterior_top", std::move(top)},
                      {"transcript", std::move(transcript)},
                      {"knowledge_version", kb_.version()}};
  if (pending_) {
    j["question"] = {{"feature", kb_.feature(*pending_).id}, {"text", kb_.feature(*pending_).question_text}};
  } else {
    j["question"] = nullptr;
  }
  j["guess"] = guess_ ? nlohmann::json(kb_.concept_id(*guess_)) : nlohmann::json(nullptr);
  return j;
}

Oracle SimulatedOracle(const KnowledgeMatrix& kb, std::size_t target, double epsilon, std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  std::vector<double> row(kb.num_features());
  for (std::size_t f = 0; f < row.size(); ++f) row[f] = kb.p_yes(target, f);
  return [rng, row = std::move(row), epsilon](std::size_t feature) {
    auto uniform = [&] { return static_cast<double>((*rng)() >> 11) * 0x1.0p-53; };
    bool yes = uniform() < row[feature];
    if (uniform() < epsilon) yes = !yes;
    return yes ? Answer::kYes : Answer::kNo;
  };
}

SessionResult RunSession(const KnowledgeMatrix& kb, const Oracle& oracle, const SessionConfig& config) {
  Session session("local", kb, config);
  while (session.state() == SessionState::kAsking) {
    session.Submit(oracle(*session.pending()));
  }
  SessionResult out;
  out.guess = kb.concept_id(*session.guess());
  out.questions = static_cast<std::size_t>(config.budget - session.budget());
  out.transcript = session.transcript();
  return out;
}

}  // namespace semmem::game
