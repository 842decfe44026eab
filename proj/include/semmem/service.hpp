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


#ifndef SEMMEM_SERVICE_HPP_
#define SEMMEM_SERVICE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>

#include "json.hpp"
#include "semmem/activation.hpp"
#include "semmem/corpus_io.hpp"
#include "semmem/error.hpp"
#include "semmem/ontology.hpp"
#include "semmem/query_game.hpp"
#include "semmem/session_log.hpp"
#include "semmem/text_pipeline.hpp"
#include "semmem/wsd.hpp"

namespace semmem::service {

struct ServiceConfig {
  std::filesystem::path triples;
  std::filesystem::path lexicon;
  std::filesystem::path synsets;    // optional
  std::filesystem::path reference;  // optional; one reference text per line
  std::filesystem::path knowledge;  // optional; derived from the network otherwise
  std::filesystem::path stoplist;   // optional; built-in list otherwise
  std::filesystem::path static_dir; // optional
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path data_dir = "data";
  std::optional<std::uint64_t> session_seed;  // deterministic session ids
  activation::ActivationConfig activation;
  corpus::EnrichOptions enrich;
  game::SessionConfig game;

  nlohmann::json ToJson() const;
  // Unknown keys are rejected. Relative paths resolve against `base`.
  static ServiceConfig FromJson(const nlohmann::json& j, const std::filesystem::path& base = {});
  // Throws kInvalidArgument for a port outside [1, 65535] or kNotFound for
  // a referenced file that does not exist.
  void Validate() const;
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
std::optional<std::string> ProcessEnv(const std::string& name);

// Precedence: flags > environment (SEMMEM_PORT, SEMMEM_DATA_DIR, SEMMEM_HOST)
// > config file > defaults. `flags` uses the same keys as the config file.
ServiceConfig ResolveConfig(const std::optional<std::filesystem::path>& file, const nlohmann::json& flags,
                            const EnvLookup& env = ProcessEnv);

struct Response {
  int status = 200;
  nlohmann::json body;
};

// Maps error codes onto HTTP status and the {code, message} envelope.
Response ErrorResponse(const Error& error);
int HttpStatus(ErrorCode code);

// All endpoint logic; transport-free so it can be driven directly.
class Service {
 public:
  explicit Service(ServiceConfig config);
  ~Service();

  Response Handle(const std::string& method, const std::string& path, const std::string& body);

  // Blocks serving HTTP until Stop(). Throws kIo when the port cannot be
  // bound.
  void Run();
  void Stop();

  const SemanticNetwork& network() const { return net_; }
  const KnowledgeStore& knowledge() const { return *store_; }
  std::filesystem::path SessionLogPath(const std::string& id) const;

 private:
  struct Slot {
    std::mutex mu;
    std::unique_ptr<game::Session> session;
    std::uint64_t seq = 0;
  };

  Response Health() const;
  Response GetConcept(const std::string& id) const;
  Response PostEnrich(const nlohmann::json& body) const;
  Response PostWsd(const nlohmann::json& body) const;
  Response PostCluster(const nlohmann::json& body) const;
  Response PostGenerate(const nlohmann::json& body) const;
  Response CreateSession(const nlohmann::json& body);
  Response Answer(const std::string& id, const nlohmann::json& body);
  Response TeachSession(const std::string& id, const nlohmann::json& body);

  std::shared_ptr<Slot> FindSlot(const std::string& id);
  std::string NewSessionId();
  void Log(Slot& slot, const std::string& kind, nlohmann::json payload);
  void LogProgress(Slot& slot, std::size_t transcript_before, bool was_asking);

  ServiceConfig config_;
  SemanticNetwork net_;
  text::StopList stoplist_;
  wsd::SynsetInventory synsets_;
  std::optional<wsd::SynsetCountTable> counts_;
  std::unique_ptr<KnowledgeStore> store_;

  std::mutex sessions_mu_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mt19937_64 id_rng_;

  struct Server;
  std::unique_ptr<Server> server_;
};

}  // namespace semmem::service

#endif  // SEMMEM_SERVICE_HPP_
