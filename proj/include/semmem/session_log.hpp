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


#ifndef SEMMEM_SESSION_LOG_HPP_
#define SEMMEM_SESSION_LOG_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "semmem/query_game.hpp"

namespace semmem::service {

// kind is one of created, question, answer, guess, teach.
struct SessionEvent {
  std::string session_id;
  std::uint64_t seq = 0;
  std::string kind;
  nlohmann::json payload;
  std::string timestamp;

  nlohmann::json ToJson() const;
  static SessionEvent FromJson(const nlohmann::json& j);
};

std::string UtcTimestamp();

// Append-only JSONL file per session. Each Append writes one complete line
// and flushes. Throws kIo.
void AppendEvent(const std::filesystem::path& path, const SessionEvent& event);

// Reads events up to the last complete line; a torn trailing line is
// ignored. Throws kCorruptLog for an empty log, a bad line before the end,
// a sequence that does not strictly increase, or a first event that is not
// "created". Throws kNotFound when the file is missing.
std::vector<SessionEvent> ReadEvents(const std::filesystem::path& path);

// Matrix versions: version 0 is the initial matrix, each teach adds one.
// Teach records persist in an append-only JSONL log and are replayed on
// open. Single writer; readers take snapshots.
class KnowledgeStore {
 public:
  // `log` may be empty for an in-memory store.
  KnowledgeStore(game::KnowledgeMatrix initial, std::filesystem::path log);

  std::shared_ptr<const game::KnowledgeMatrix> Latest() const;
  // Throws kNotFound for an unknown version.
  std::shared_ptr<const game::KnowledgeMatrix> Version(std::uint64_t version) const;
  // Returns the new latest matrix.
  std::shared_ptr<const game::KnowledgeMatrix> Teach(const std::string& concept_id,
                                                     std::span<const game::Fact> facts);

 private:
  std::filesystem::path log_;
  mutable std::mutex mu_;
  std::vector<std::shared_ptr<const game::KnowledgeMatrix>> versions_;
};

nlohmann::json FactsToJson(std::span<const game::Fact> facts);
// Accepts {"feature": p, ...} or [["feature", p], ...]. Throws kParse.
std::vector<game::Fact> FactsFromJson(const nlohmann::json& j);

// Rebuilds a session from its events. The created event names the matrix
// version the session started from.
game::Session Replay(std::span<const SessionEvent> events, const KnowledgeStore& store);

}  // namespace semmem::service

#endif  // SEMMEM_SESSION_LOG_HPP_
