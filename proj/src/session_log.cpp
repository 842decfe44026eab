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


#include "semmem/session_log.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <set>

#include "semmem/error.hpp"

namespace semmem::service {

nlohmann::json SessionEvent::ToJson() const {
  return {{"session_id", session_id}, {"seq", seq}, {"kind", kind}, {"payload", payload}, {"timestamp", timestamp}};
}

SessionEvent SessionEvent::FromJson(const nlohmann::json& j) {
  SessionEvent e;
  e.session_id = j.at("session_id").get<std::string>();
  e.seq = j.at("seq").get<std::uint64_t>();
  e.kind = j.at("kind").get<std::string>();
  e.payload = j.value("payload", nlohmann::json(nullptr));
  e.timestamp = j.value("timestamp", std::string());
  static const std::set<std::string> kKinds = {"created", "question", "answer", "guess", "teach"};
  if (!kKinds.contains(e.kind)) throw Error(ErrorCode::kCorruptLog, "unknown event kind '" + e.kind + "'");
  return e;
}

std::string UtcTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count() % 1000;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900, tm.tm_mon + 1,
                tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<int>(ms));
  return buf;
}

void AppendEvent(const std::filesystem::path& path, const SessionEvent& event) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw Error(ErrorCode::kIo, "cannot open session log " + path.string());
  out << event.ToJson().dump() << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "cannot append to session log " + path.string());
}

std::vector<SessionEvent> ReadEvents(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "no session log " + path.string());
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<SessionEvent> events;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos < body.size()) {
    const std::size_t nl = body.find('\n', pos);
    ++lineno;
    if (nl == std::string::npos) break;  // torn write; everything before it stands
    const std::string line = body.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    try {
      SessionEvent e = SessionEvent::FromJson(nlohmann::json::parse(line));
      if (!events.empty() && e.seq <= events.back().seq) {
        throw Error(ErrorCode::kCorruptLog, "sequence does not increase");
      }
      if (!events.empty() && e.session_id != events.front().session_id) {
        throw Error(ErrorCode::kCorruptLog, "mixed session ids");
      }
      events.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::kCorruptLog, path.string() + ":" + std::to_string(lineno) + ": " + ex.what());
    } catch (const Error& ex) {
      throw Error(ErrorCode::kCorruptLog, path.string() + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  if (events.empty()) throw Error(ErrorCode::kCorruptLog, "session log " + path.string() + " is empty");
  if (events.front().kind != "created") {
    throw Error(ErrorCode::kCorruptLog, "session log " + path.string() + " does not start with a created event");
  }
  return events;
}

nlohmann::json FactsToJson(std::span<const game::Fact> facts) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [f, p] : facts) j.push_back({f, p});
  return j;
}

std::vector<game::Fact> FactsFromJson(const nlohmann::json& j) {
  std::vector<game::Fact> facts;
  try {
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) facts.emplace_back(k, v.get<double>());
    } else if (j.is_array()) {
      for (const auto& row : j) facts.emplace_back(row.at(0).get<std::string>(), row.at(1).get<double>());
    } else if (!j.is_null()) {
      throw Error(ErrorCode::kParse, "facts must be an object or an array of pairs");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("facts: ") + e.what());
  }
  return facts;
}

KnowledgeStore::KnowledgeStore(game::KnowledgeMatrix initial, std::filesystem::path log) : log_(std::move(log)) {
  versions_.push_back(std::make_shared<const game::KnowledgeMatrix>(std::move(initial)));
  if (log_.empty() || !std::filesystem::exists(log_)) return;
  std::ifstream in(log_);
  if (!in) throw Error(ErrorCode::kIo, "cannot open knowledge log " + log_.string());
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const auto facts = FactsFromJson(j.at("facts"));
      versions_.push_back(std::make_shared<const game::KnowledgeMatrix>(
          versions_.back()->Teach(j.at("concept").get<std::string>(), facts)));
    } catch (const nlohmann::json::exception&) {
      if (in.peek() == EOF) break;  // torn last line
      throw Error(ErrorCode::kCorruptLog, log_.string() + ":" + std::to_string(lineno) + ": bad teach record");
    }
  }
}

std::shared_ptr<const game::KnowledgeMatrix> KnowledgeStore::Latest() const {
  std::lock_guard lock(mu_);
  return versions_.back();
}

std::shared_ptr<const game::KnowledgeMatrix> KnowledgeStore::Version(std::uint64_t version) const {
  std::lock_guard lock(mu_);
  const std::uint64_t base = versions_.front()->version();
  if (version < base || version - base >= versions_.size()) {
    throw Error(ErrorCode::kNotFound, "unknown knowledge version " + std::to_string(version));
  }
  return versions_[version - base];
}

std::shared_ptr<const game::KnowledgeMatrix> KnowledgeStore::Teach(const std::string& concept_id,
                                                                   std::span<const game::Fact> facts) {
  std::lock_guard lock(mu_);
  auto next = std::make_shared<const game::KnowledgeMatrix>(versions_.back()->Teach(concept_id, facts));
  if (!log_.empty()) {
    std::error_code ec;
    if (log_.has_parent_path()) std::filesystem::create_directories(log_.parent_path(), ec);
    std::ofstream out(log_, std::ios::binary | std::ios::app);
    nlohmann::json rec = {{"concept", concept_id}, {"facts", FactsToJson(facts)}, {"version", next->version()}};
    out << rec.dump() << '\n';
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "cannot append to knowledge log " + log_.string());
  }
  versions_.push_back(next);
  return next;
}

game::Session Replay(std::span<const SessionEvent> events, const KnowledgeStore& store) {
  if (events.empty() || events.front().kind != "created") {
    throw Error(ErrorCode::kCorruptLog, "replay needs a created event first");
  }
  const SessionEvent& created = events.front();
  try {
    const auto kb = store.Version(created.payload.at("kb_version").get<std::uint64_t>());
    game::Session session(created.session_id, *kb, game::SessionConfig::FromJson(created.payload.at("config")));
    for (std::size_t i = 1; i < events.size(); ++i) {
      const SessionEvent& e = events[i];
      if (e.kind == "answer") {
        const auto answer = game::ParseAnswer(e.payload.at("answer").get<std::string>());
        if (!answer) throw Error(ErrorCode::kCorruptLog, "bad answer in event " + std::to_string(e.seq));
        session.Submit(*answer);
      } else if (e.kind == "teach") {
        const auto facts = FactsFromJson(e.payload.at("facts"));
        session.Teach(e.payload.at("concept").get<std::string>(), facts);
      }
      // question and guess events restate derived state.
    }
    return session;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kCorruptLog, std::string("replay: ") + ex.what());
  }
}

}  // namespace semmem::service
