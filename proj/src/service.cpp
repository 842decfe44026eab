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


#include "semmem/service.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "semmem/cluster.hpp"
#include "semmem/error.hpp"
#include "semmem/mds.hpp"
#include "semmem/neologism.hpp"
#include "semmem/normalize.hpp"

namespace semmem::service {
namespace {

const std::set<std::string> kPathKeys = {"triples", "lexicon", "synsets", "reference",
                                         "knowledge", "stoplist", "static_dir", "data_dir"};

std::vector<std::string> SplitPath(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (!part.empty()) parts.push_back(httplib::detail::decode_url(part, false));
  }
  return parts;
}

nlohmann::json ParseBody(const std::string& body) {
  if (body.find_first_not_of(" \t\r\n") == std::string::npos) return nlohmann::json::object();
  try {
    nlohmann::json j = nlohmann::json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::kParse, "request body must be a JSON object");
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON body: ") + e.what());
  }
}

// Typed field access that reports malformed requests as parse errors.
template <typename T>
T Field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kParse, std::string("field '") + key + "' has the wrong type");
  }
}

template <typename T>
T FieldOr(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  return Field<T>(j, key);
}

std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

}  // namespace

nlohmann::json ServiceConfig::ToJson() const {
  nlohmann::json j = {{"triples", triples.string()},     {"lexicon", lexicon.string()},
                      {"synsets", synsets.string()},     {"reference", reference.string()},
                      {"knowledge", knowledge.string()}, {"stoplist", stoplist.string()},
                      {"static_dir", static_dir.string()}, {"host", host},
                      {"port", port},                    {"data_dir", data_dir.string()},
                      {"activation", activation.ToJson()}, {"enrich", enrich.ToJson()},
                      {"game", game.ToJson()}};
  j["session_seed"] = session_seed ? nlohmann::json(*session_seed) : nlohmann::json(nullptr);
  return j;
}

ServiceConfig ServiceConfig::FromJson(const nlohmann::json& j, const std::filesystem::path& base) {
  static const std::set<std::string> kKeys = {"triples",  "lexicon",    "synsets", "reference", "knowledge",
                                              "stoplist", "static_dir", "host",    "port",      "data_dir",
                                              "session_seed", "activation", "enrich", "game"};
  if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!kKeys.contains(k)) throw Error(ErrorCode::kInvalidArgument, "unknown config key '" + k + "'");
  }
  ServiceConfig c;
  try {
    auto path = [&](const char* key, std::filesystem::path& out) {
      if (!j.contains(key) || j.at(key).is_null()) return;
      std::filesystem::path p = j.at(key).get<std::string>();
      if (!p.empty() && p.is_relative() && !base.empty()) p = base / p;
      out = p;
    };
    path("triples", c.triples);
    path("lexicon", c.lexicon);
    path("synsets", c.synsets);
    path("reference", c.reference);
    path("knowledge", c.knowledge);
    path("stoplist", c.stoplist);
    path("static_dir", c.static_dir);
    path("data_dir", c.data_dir);
    c.host = j.value("host", c.host);
    c.port = j.value("port", c.port);
    if (j.contains("session_seed") && !j.at("session_seed").is_null()) {
      c.session_seed = j.at("session_seed").get<std::uint64_t>();
    }
    if (j.contains("activation")) c.activation = activation::ActivationConfig::FromJson(j.at("activation"));
    if (j.contains("enrich")) c.enrich = corpus::EnrichOptions::FromJson(j.at("enrich"));
    if (j.contains("game")) c.game = game::SessionConfig::FromJson(j.at("game"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("config: ") + e.what());
  }
  return c;
}

void ServiceConfig::Validate() const {
  if (port < 1 || port > 65535) {
    throw Error(ErrorCode::kInvalidArgument, "port " + std::to_string(port) + " outside [1, 65535]");
  }
  if (triples.empty() || lexicon.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "config needs both 'triples' and 'lexicon'");
  }
  for (const auto* p : {&triples, &lexicon, &synsets, &reference, &knowledge, &stoplist, &static_dir}) {
    if (!p->empty() && !std::filesystem::exists(*p)) {
      throw Error(ErrorCode::kNotFound, "configured path does not exist: " + p->string());
    }
  }
  if (!reference.empty() && synsets.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "'reference' needs 'synsets'");
  }
}

std::optional<std::string> ProcessEnv(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (!v) return std::nullopt;
  return std::string(v);
}

ServiceConfig ResolveConfig(const std::optional<std::filesystem::path>& file, const nlohmann::json& flags,
                            const EnvLookup& env) {
  nlohmann::json merged = nlohmann::json::object();
  if (file) {
    nlohmann::json f;
    try {
      f = nlohmann::json::parse(corpus::ReadFile(*file));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, file->string() + ": " + e.what());
    }
    if (!f.is_object()) throw Error(ErrorCode::kInvalidArgument, "config file must hold a JSON object");
    // Paths in the file are relative to the file itself.
    const std::filesystem::path base = file->parent_path();
    for (auto& [k, v] : f.items()) {
      if (kPathKeys.contains(k) && v.is_string()) {
        std::filesystem::path p = v.get<std::string>();
        if (!p.empty() && p.is_relative()) v = (base / p).string();
      }
    }
    merged = std::move(f);
  }
  if (auto port = env("SEMMEM_PORT")) {
    try {
      std::size_t used = 0;
      const int p = std::stoi(*port, &used);
      if (used != port->size()) throw std::invalid_argument("trailing characters");
      merged["port"] = p;
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument, "SEMMEM_PORT is not an integer: '" + *port + "'");
    }
  }
  if (auto dir = env("SEMMEM_DATA_DIR")) merged["data_dir"] = *dir;
  if (auto host = env("SEMMEM_HOST")) merged["host"] = *host;
  if (!flags.is_null()) {
    for (const auto& [k, v] : flags.items()) merged[k] = v;
  }
  return ServiceConfig::FromJson(merged);
}

int HttpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kParse: return 400;
    case ErrorCode::kConflict: return 409;
    case ErrorCode::kIo:
    case ErrorCode::kCorruptLog: return 503;
    default: return 422;
  }
}

Response ErrorResponse(const Error& error) {
  return Response{HttpStatus(error.code()),
                  {{"code", std::string(ErrorCodeName(error.code()))}, {"message", error.what()}}};
}

struct Service::Server {
  httplib::Server http;
};

Service::Service(ServiceConfig config) : config_(std::move(config)) {
  config_.Validate();
  net_ = SemanticNetwork::Ingest(config_.triples, config_.lexicon);
  stoplist_ = config_.stoplist.empty() ? text::DefaultStopList() : text::LoadStopList(config_.stoplist);
  if (!config_.synsets.empty()) synsets_ = wsd::SynsetInventory::Load(config_.synsets, net_);
  if (!config_.reference.empty()) {
    const auto texts = ReadLines(config_.reference);
    counts_ = wsd::BuildReferenceCounts(texts, synsets_, net_, stoplist_, {}, config_.reference.filename().string());
  }
  game::KnowledgeMatrix kb = config_.knowledge.empty() ? game::KnowledgeMatrix::FromNetwork(net_)
                                                       : game::KnowledgeMatrix::Load(config_.knowledge);
  store_ = std::make_unique<KnowledgeStore>(std::move(kb), config_.data_dir / "knowledge.jsonl");
  server_ = std::make_unique<Server>();
  if (config_.session_seed) {
    id_rng_.seed(*config_.session_seed);
  } else {
    std::random_device rd;
    id_rng_.seed((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
  }
}

Service::~Service() = default;

std::filesystem::path Service::SessionLogPath(const std::string& id) const {
  return config_.data_dir / "sessions" / (id + ".jsonl");
}

std::string Service::NewSessionId() {
  std::lock_guard lock(sessions_mu_);
  std::uint64_t hi = id_rng_();
  std::uint64_t lo = id_rng_();
  hi = (hi & 0xffffffffffff0fffULL) | 0x0000000000004000ULL;  // version 4
  lo = (lo & 0x3fffffffffffffffULL) | 0x8000000000000000ULL;  // RFC 4122 variant
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%08x-%04x-%04x-%04x-%012llx", static_cast<unsigned>(hi >> 32),
                static_cast<unsigned>((hi >> 16) & 0xffff), static_cast<unsigned>(hi & 0xffff),
                static_cast<unsigned>(lo >> 48), static_cast<unsigned long long>(lo & 0xffffffffffffULL));
  return buf;
}

Response Service::Handle(const std::string& method, const std::string& path, const std::string& body) {
  try {
    const auto parts = SplitPath(path);
    if (parts.size() < 2 || parts[0] != "v1") throw Error(ErrorCode::kNotFound, "no route for " + path);
    if (method == "GET") {
      if (parts.size() == 2 && parts[1] == "health") return Health();
      if (parts.size() == 3 && parts[1] == "concepts") return GetConcept(parts[2]);
    } else if (method == "POST") {
      if (parts.size() == 2) {
        if (parts[1] == "enrich") return PostEnrich(ParseBody(body));
        if (parts[1] == "wsd") return PostWsd(ParseBody(body));
        if (parts[1] == "cluster") return PostCluster(ParseBody(body));
        if (parts[1] == "generate") return PostGenerate(ParseBody(body));
        if (parts[1] == "sessions") return CreateSession(ParseBody(body));
      }
      if (parts.size() == 4 && parts[1] == "sessions") {
        if (parts[3] == "answer") return Answer(parts[2], ParseBody(body));
        if (parts[3] == "teach") return TeachSession(parts[2], ParseBody(body));
      }
    }
    throw Error(ErrorCode::kNotFound, "no route for " + method + " " + path);
  } catch (const Error& e) {
    return ErrorResponse(e);
  } catch (const nlohmann::json::exception& e) {
    return ErrorResponse(Error(ErrorCode::kParse, e.what()));
  } catch (const std::exception& e) {
    return Response{500, {{"code", "Internal"}, {"message", e.what()}}};
  }
}

Response Service::Health() const {
  return Response{200, {{"status", "ok"}, {"concepts", net_.size()}}};
}

Response Service::GetConcept(const std::string& id) const {
  const ConceptIndex idx = net_.Require(NormalizeId(id));
  const Concept& c = net_.concept_at(idx);
  nlohmann::json out = nlohmann::json::array();
  for (const Edge& e : net_.OutEdges(idx)) {
    out.push_back({{"relation_type", e.relation_type},
                   {"target", net_.id_at(e.target)},
                   {"weight", e.weight},
                   {"polarity", PolarityName(e.polarity)}});
  }
  nlohmann::json in = nlohmann::json::array();
  for (const Edge& e : net_.InEdges(idx)) {
    in.push_back({{"source", net_.id_at(e.source)},
                  {"relation_type", e.relation_type},
                  {"weight", e.weight},
                  {"polarity", PolarityName(e.polarity)}});
  }
  return Response{200,
                  {{"id", c.id},
                   {"name", c.preferred_name},
                   {"forms", c.lexical_forms},
                   {"type", c.semantic_type},
                   {"out", std::move(out)},
                   {"in", std::move(in)}}};
}

Response Service::PostEnrich(const nlohmann::json& body) const {
  const auto raw = Field<nlohmann::json>(body, "documents");
  if (!raw.is_array()) throw Error(ErrorCode::kParse, "'documents' must be an array");
  std::vector<corpus::Document> docs;
  std::set<std::string> ids;
  for (const auto& d : raw) {
    try {
      docs.push_back(corpus::DocumentFromJson(d));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("document: ") + e.what());
    }
    if (!ids.insert(docs.back().id).second) throw Error(ErrorCode::kParse, "duplicate document id");
  }
  corpus::EnrichOptions options = config_.enrich;
  if (body.contains("options")) {
    nlohmann::json merged = config_.enrich.ToJson();
    for (const auto& [k, v] : body.at("options").items()) merged[k] = v;
    options = corpus::EnrichOptions::FromJson(merged);
  }
  const corpus::EnrichResult r = corpus::Enrich(docs, net_, stoplist_, options);
  nlohmann::json documents = nlohmann::json::array();
  for (const auto& d : r.expansion.documents) documents.push_back(coset::ToJson(d));
  nlohmann::json scores = nlohmann::json::object();
  for (const auto& [id, s] : r.expansion.scores) scores[id] = s;
  return Response{200,
                  {{"documents", std::move(documents)},
                   {"selected", r.expansion.selected},
                   {"scores", std::move(scores)},
                   {"orders_run", r.expansion.orders_run},
                   {"vectors", corpus::VectorsToJson(r.vectors)}}};
}

Response Service::PostWsd(const nlohmann::json& body) const {
  const std::string text = Field<std::string>(body, "text");
  activation::ActivationConfig cfg = config_.activation;
  if (body.contains("activation")) {
    try {
      cfg = activation::ActivationConfig::FromJson(body.at("activation"));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, std::string("activation: ") + e.what());
    }
  }
  text::PipelineOptions pipeline = config_.enrich.pipeline;
  const text::AnalyzedText analyzed = text::Analyze(text, net_, stoplist_, pipeline);
  nlohmann::json mentions = nlohmann::json::array();
  for (const auto& m : analyzed.mentions) {
    mentions.push_back({{"surface", m.matched_surface},
                        {"begin", analyzed.tokens[m.token_begin].begin},
                        {"end", analyzed.tokens[m.token_end - 1].end},
                        {"candidates", m.candidates},
                        {"spelling_corrected", m.spelling_corrected}});
  }
  nlohmann::json out = {{"mentions", std::move(mentions)}};
  if (analyzed.mentions.empty()) {
    out["graph"] = {{"chosen", nlohmann::json::array()}, {"edges", nlohmann::json::array()},
                    {"score", 0.0},                      {"converged", true},
                    {"iterations", 0},                   {"activations", nlohmann::json::object()}};
    out["top_activated"] = nlohmann::json::array();
  } else {
    const auto graph = wsd::DisambiguateActivation(analyzed.mentions, net_, cfg);
    out["graph"] = wsd::ToJson(graph);
    std::vector<std::pair<ConceptId, double>> top(graph.activations.begin(), graph.activations.end());
    std::stable_sort(top.begin(), top.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    nlohmann::json list = nlohmann::json::array();
    for (std::size_t i = 0; i < top.size() && i < 10; ++i) {
      if (top[i].second <= 0.0) break;
      list.push_back({{"concept", top[i].first}, {"activation", top[i].second}});
    }
    out["top_activated"] = std::move(list);
  }
  if (counts_) {
    wsd::AnnotateOptions ao;
    ao.activation = cfg;
    nlohmann::json ann = nlohmann::json::array();
    for (const auto& a : wsd::AnnotateSynsets(text, *counts_, synsets_, net_, stoplist_, ao)) {
      ann.push_back(wsd::ToJson(a));
    }
    out["synsets"] = std::move(ann);
  }
  return Response{200, std::move(out)};
}

Response Service::PostCluster(const nlohmann::json& body) const {
  corpus::VectorTable table;
  try {
    table = corpus::VectorsFromJson(Field<nlohmann::json>(body, "vectors"));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  const int k = Field<int>(body, "k");
  std::map<std::string, std::string> gold;
  if (body.contains("gold")) gold = Field<std::map<std::string, std::string>>(body, "gold");
  const auto points = corpus::ToPoints(table);
  const auto result = cluster::ClusterDocuments(points, k, gold.empty() ? nullptr : &gold);
  nlohmann::json out = cluster::ToJson(result);
  const std::size_t dim = FieldOr<std::size_t>(body, "dim", 2);
  nlohmann::json coords = nlohmann::json::array();
  if (result.doc_ids.size() > dim) {
    const auto emb = mds::ClassicalMds(result.distances, dim);
    for (std::size_t i = 0; i < emb.n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t d = 0; d < dim; ++d) row.push_back(emb.at(i, d));
      coords.push_back({{"doc_id", result.doc_ids[i]}, {"coords", std::move(row)}});
    }
  }
  out["embedding"] = std::move(coords);
  return Response{200, std::move(out)};
}

Response Service::PostGenerate(const nlohmann::json& body) const {
  const auto morphemes = Field<std::vector<std::string>>(body, "morphemes");
  const std::size_t count = FieldOr<std::size_t>(body, "count", 10);
  const std::uint64_t seed = FieldOr<std::uint64_t>(body, "seed", 0);
  const int n = FieldOr<int>(body, "n", 3);
  const double alpha = FieldOr<double>(body, "alpha", 0.1);
  neo::GenerateOptions go;
  go.lambda = FieldOr<double>(body, "lambda", go.lambda);
  std::vector<std::string> words = FieldOr<std::vector<std::string>>(body, "words", {});
  if (words.empty()) {
    for (const auto& [surface, ids] : net_.surfaces()) {
      if (!ContainsWhitespace(surface)) words.push_back(surface);
    }
  }
  const auto model = neo::TrainNgram(words, n, alpha);
  auto candidates = neo::Generate(model, morphemes, count, seed, words, go);
  if (FieldOr<bool>(body, "filter", true)) {
    std::set<std::string> lexicon(words.begin(), words.end());
    for (const auto& [surface, ids] : net_.surfaces()) lexicon.insert(surface);
    candidates = neo::FilterNovel(std::move(candidates), lexicon);
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : candidates) list.push_back(neo::ToJson(c));
  return Response{200, {{"candidates", std::move(list)}}};
}

void Service::Log(Slot& slot, const std::string& kind, nlohmann::json payload) {
  SessionEvent e{slot.session->id(), ++slot.seq, kind, std::move(payload), UtcTimestamp()};
  AppendEvent(SessionLogPath(e.session_id), e);
}

void Service::LogProgress(Slot& slot, std::size_t transcript_before, bool was_asking) {
  const game::Session& s = *slot.session;
  if (s.state() == game::SessionState::kAsking && s.transcript().size() > transcript_before) {
    const auto& q = s.transcript().back();
    Log(slot, "question", {{"feature", q.feature}, {"text", q.question}, {"gain", q.gain}});
  } else if (was_asking && s.state() == game::SessionState::kGuessed) {
    Log(slot, "guess", {{"concept", s.knowledge().concept_id(*s.guess())}});
  }
}

Response Service::CreateSession(const nlohmann::json& body) {
  game::SessionConfig cfg = config_.game;
  if (body.contains("config")) {
    nlohmann::json merged = config_.game.ToJson();
    for (const auto& [k, v] : body.at("config").items()) merged[k] = v;
    cfg = game::SessionConfig::FromJson(merged);
  }
  const auto kb = store_->Latest();
  auto slot = std::make_shared<Slot>();
  const std::string id = NewSessionId();
  slot->session = std::make_unique<game::Session>(id, *kb, cfg);
  Log(*slot, "created", {{"config", cfg.ToJson()}, {"kb_version", kb->version()}});
  LogProgress(*slot, 0, true);
  {
    std::lock_guard lock(sessions_mu_);
    sessions_[id] = slot;
  }
  return Response{201, slot->session->ToJson()};
}

std::shared_ptr<Service::Slot> Service::FindSlot(const std::string& id) {
  std::lock_guard lock(sessions_mu_);
  auto it = sessions_.find(id);
  if (it != sessions_.end()) return it->second;
  // A session from an earlier process: rebuild it from its log.
  const auto path = SessionLogPath(id);
  if (id.find('/') != std::string::npos || id.find("..") != std::string::npos || !std::filesystem::exists(path)) {
    throw Error(ErrorCode::kNotFound, "unknown session '" + id + "'");
  }
  const auto events = ReadEvents(path);
  auto slot = std::make_shared<Slot>();
  slot->session = std::make_unique<game::Session>(Replay(events, *store_));
  slot->seq = events.back().seq;
  sessions_[id] = slot;
  return slot;
}

Response Service::Answer(const std::string& id, const nlohmann::json& body) {
  auto slot = FindSlot(id);
  const std::string text = Field<std::string>(body, "answer");
  const auto answer = game::ParseAnswer(text);
  if (!answer || (text != "yes" && text != "no" && text != "unknown")) {
    throw Error(ErrorCode::kParse, "answer must be one of yes, no, unknown; got '" + text + "'");
  }
  std::unique_lock lock(slot->mu, std::try_to_lock);
  if (!lock.owns_lock()) throw Error(ErrorCode::kConflict, "an answer for session '" + id + "' is in progress");
  game::Session& s = *slot->session;
  if (s.state() != game::SessionState::kAsking) {
    throw Error(ErrorCode::kConflict, "session '" + id + "' is " + std::string(game::StateName(s.state())));
  }
  Log(*slot, "answer", {{"feature", s.knowledge().feature(*s.pending()).id}, {"answer", text}});
  const std::size_t before = s.transcript().size();
  s.Submit(*answer);
  LogProgress(*slot, before, true);
  return Response{200, s.ToJson()};
}

Response Service::TeachSession(const std::string& id, const nlohmann::json& body) {
  auto slot = FindSlot(id);
  const std::string concept_id = NormalizeId(Field<std::string>(body, "concept"));
  if (concept_id.empty()) throw Error(ErrorCode::kParse, "'concept' is empty");
  const auto facts = FactsFromJson(body.contains("facts") ? body.at("facts") : nlohmann::json(nullptr));
  std::unique_lock lock(slot->mu, std::try_to_lock);
  if (!lock.owns_lock()) throw Error(ErrorCode::kConflict, "session '" + id + "' is busy");
  game::Session& s = *slot->session;
  if (s.state() == game::SessionState::kDone) {
    throw Error(ErrorCode::kConflict, "session '" + id + "' is already done");
  }
  // Validate against a scratch copy before anything is persisted.
  (void)s.knowledge().Teach(concept_id, facts);
  Log(*slot, "teach", {{"concept", concept_id}, {"facts", FactsToJson(facts)}});
  store_->Teach(concept_id, facts);
  s.Teach(concept_id, facts);
  return Response{200, s.ToJson()};
}

void Service::Run() {
  auto& http = server_->http;
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const Response r = Handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  http.Get(R"(/v1/.*)", handler);
  http.Post(R"(/v1/.*)", handler);
  if (!config_.static_dir.empty()) http.set_mount_point("/", config_.static_dir.string());
  if (!http.bind_to_port(config_.host, config_.port)) {
    throw Error(ErrorCode::kIo, "cannot bind " + config_.host + ":" + std::to_string(config_.port));
  }
  http.listen_after_bind();
}

void Service::Stop() {
  server_->http.stop();
}

}  // namespace semmem::service
