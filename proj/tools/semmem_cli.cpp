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


// semmem command-line front end. Exit status: 0 success, 1 domain error,
// 2 usage error.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "semmem/activation.hpp"
#include "semmem/cluster.hpp"
#include "semmem/corpus_io.hpp"
#include "semmem/error.hpp"
#include "semmem/mds.hpp"
#include "semmem/neologism.hpp"
#include "semmem/normalize.hpp"
#include "semmem/ontology.hpp"
#include "semmem/parallel.hpp"
#include "semmem/plot.hpp"
#include "semmem/query_game.hpp"
#include "semmem/service.hpp"
#include "semmem/text_pipeline.hpp"
#include "semmem/wsd.hpp"

namespace {

using semmem::Error;
using semmem::ErrorCode;
using nlohmann::json;

struct NetworkArgs {
  std::string triples;
  std::string lexicon;
  std::string stoplist;

  void Attach(CLI::App* app, bool required) {
    auto* t = app->add_option("--triples", triples, "relation triples (TSV)")->check(CLI::ExistingFile);
    auto* l = app->add_option("--lexicon", lexicon, "lexicon and concept declarations (JSONL)")
                  ->check(CLI::ExistingFile);
    if (required) {
      t->required();
      l->required();
    }
    app->add_option("--stoplist", stoplist, "stop-word list, one per line")->check(CLI::ExistingFile);
  }
  semmem::SemanticNetwork Load() const { return semmem::SemanticNetwork::Ingest(triples, lexicon); }
  semmem::text::StopList Stops() const {
    return stoplist.empty() ? semmem::text::DefaultStopList() : semmem::text::LoadStopList(stoplist);
  }
};

struct ActivationArgs {
  semmem::activation::ActivationConfig cfg;

  void Attach(CLI::App* app) {
    app->add_option("--decay", cfg.decay, "activation decay d")->capture_default_str();
    app->add_option("--gain", cfg.gain, "propagation gain g")->capture_default_str();
    app->add_option("--threshold", cfg.threshold, "activation floor")->capture_default_str();
    app->add_option("--tol", cfg.tol, "convergence tolerance")->capture_default_str();
    app->add_option("--max-iter", cfg.max_iter, "iteration cap")->capture_default_str();
  }
};

void Emit(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
  } else {
    semmem::corpus::WriteFile(path, body);
  }
}

std::string ReadText(const std::string& text, const std::string& input) {
  if (!input.empty()) return semmem::corpus::ReadFile(input);
  return text;
}

std::vector<std::string> Lines(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(semmem::corpus::ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

int RunPlay(const semmem::game::KnowledgeMatrix& kb, const semmem::game::SessionConfig& cfg,
            const std::string& target, const std::string& teach_out) {
  using namespace semmem::game;
  if (!target.empty()) {
    const auto idx = kb.FindConcept(semmem::NormalizeId(target));
    if (!idx) throw Error(ErrorCode::kNotFound, "unknown target concept '" + target + "'");
    const SessionResult r = RunSession(kb, SimulatedOracle(kb, *idx, cfg.epsilon, cfg.seed), cfg);
    json transcript = json::array();
    for (const auto& t : r.transcript) {
      transcript.push_back({{"feature", t.feature}, {"answer", t.answer ? json(AnswerName(*t.answer)) : json()}});
    }
    std::cout << json{{"target", kb.concept_id(*idx)}, {"guess", r.guess}, {"questions", r.questions},
                      {"correct", r.guess == kb.concept_id(*idx)}, {"transcript", transcript}}
                     .dump()
              << "\n";
    return 0;
  }

  Session session("terminal", kb, cfg);
  std::string line;
  while (session.state() == SessionState::kAsking) {
    const auto& q = kb.feature(*session.pending());
    std::cout << "Q" << session.transcript().size() << ": " << q.question_text << " [y/n/u] " << std::flush;
    if (!std::getline(std::cin, line)) throw Error(ErrorCode::kInvalidArgument, "input ended before a guess");
    const auto answer = ParseAnswer(semmem::NormalizeSurface(line));
    if (!answer) {
      std::cout << "please answer y, n or u\n";
      continue;
    }
    session.Submit(*answer);
  }
  const std::string guess = kb.concept_id(*session.guess());
  std::cout << "Is it " << guess << "? [y/n] " << std::flush;
  if (!std::getline(std::cin, line)) return 0;
  if (semmem::NormalizeSurface(line).starts_with("y")) {
    std::cout << "Got it.\n";
    return 0;
  }
  std::cout << "What was it? " << std::flush;
  if (!std::getline(std::cin, line) || semmem::NormalizeId(line).empty()) return 0;
  std::vector<Fact> facts;
  for (const auto& t : session.transcript()) {
    if (t.answer == Answer::kYes) facts.emplace_back(t.feature, 1.0);
    if (t.answer == Answer::kNo) facts.emplace_back(t.feature, 0.0);
  }
  session.Teach(semmem::NormalizeId(line), facts);
  std::cout << "Learned " << semmem::NormalizeId(line) << " from " << facts.size() << " answers.\n";
  if (!teach_out.empty()) semmem::corpus::WriteFile(teach_out, session.knowledge().ToJson().dump(2) + "\n");
  return 0;
}

semmem::service::Service* g_service = nullptr;

void HandleSignal(int) {
  if (g_service) g_service->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semmem: semantic memory engine"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "build the semantic network and report or export it");
  NetworkArgs ingest_net;
  ingest_net.Attach(ingest, true);
  std::string ingest_out;
  ingest->add_option("--out", ingest_out, "write the normalized network JSON here");

  // enrich
  auto* enrich = app.add_subcommand("enrich", "coset expansion and feature ranking over a labeled corpus");
  NetworkArgs enrich_net;
  enrich_net.Attach(enrich, true);
  std::string corpus_path, enrich_out, vectors_out, baseline_out, relations, metric = "information_gain";
  semmem::corpus::EnrichOptions eopt;
  double tau = -1.0;
  bool no_spelling = false;
  enrich->add_option("--corpus", corpus_path, "corpus JSONL {id,label,text}")->required()->check(CLI::ExistingFile);
  enrich->add_option("--out", enrich_out, "enhanced corpus JSONL (default stdout)");
  enrich->add_option("--vectors-out", vectors_out, "document vector table JSON");
  enrich->add_option("--baseline-out", baseline_out, "order-0 document vector table JSON");
  enrich->add_option("--relations", relations, "comma-separated relation types (default all)");
  enrich->add_option("--max-order", eopt.expansion.max_order, "highest coset order")->capture_default_str();
  enrich->add_option("--tau", tau, "score threshold (default: keep top-k)");
  enrich->add_option("--top-k", eopt.expansion.top_k, "added features kept without --tau")->capture_default_str();
  enrich->add_option("--metric", metric, "information_gain or chi_square")->capture_default_str();
  enrich->add_option("--gamma", eopt.gamma, "per-order attenuation")->capture_default_str();
  enrich->add_flag("--disambiguate", eopt.disambiguate, "resolve senses before expansion");
  enrich->add_flag("--no-spelling", no_spelling, "disable spelling repair");

  // wsd
  auto* wsdc = app.add_subcommand("wsd", "disambiguate a text");
  NetworkArgs wsd_net;
  wsd_net.Attach(wsdc, true);
  ActivationArgs wsd_act;
  wsd_act.Attach(wsdc);
  std::string wsd_text, wsd_input, synsets_path, reference_path;
  auto* wsd_text_opt = wsdc->add_option("--text", wsd_text, "text to analyze");
  wsdc->add_option("--input", wsd_input, "read the text from a file")->check(CLI::ExistingFile)->excludes(wsd_text_opt);
  wsdc->add_option("--synsets", synsets_path, "synset inventory JSONL")->check(CLI::ExistingFile);
  wsdc->add_option("--reference", reference_path, "reference corpus, one text per line")
      ->check(CLI::ExistingFile)
      ->needs(wsdc->get_option("--synsets"));

  // cluster
  auto* clusterc = app.add_subcommand("cluster", "average-linkage clustering with an MDS plot");
  int k = 0;
  std::string vectors_path, plot_prefix, gold_corpus;
  clusterc->add_option("--k", k, "number of clusters")->required();
  clusterc->add_option("--vectors", vectors_path, "vector table JSON")->required()->check(CLI::ExistingFile);
  clusterc->add_option("--out", plot_prefix, "write <out>.csv and <out>.svg")->required();
  clusterc->add_option("--corpus", gold_corpus, "labeled corpus for purity and ARI")->check(CLI::ExistingFile);

  // play
  auto* play = app.add_subcommand("play", "terminal 20-questions session");
  NetworkArgs play_net;
  play_net.Attach(play, false);
  std::string kb_path, target, teach_out;
  semmem::game::SessionConfig gcfg;
  play->add_option("--knowledge", kb_path, "knowledge matrix JSON (default: derive from network)")
      ->check(CLI::ExistingFile);
  play->add_option("--budget", gcfg.budget, "question budget")->capture_default_str();
  play->add_option("--guess-threshold", gcfg.guess_threshold, "posterior needed to guess")->capture_default_str();
  play->add_option("--epsilon", gcfg.epsilon, "answer noise")->capture_default_str();
  play->add_option("--seed", gcfg.seed, "seed for the simulated answerer")->capture_default_str();
  play->add_option("--target", target, "answer automatically as this concept");
  play->add_option("--teach-out", teach_out, "write the taught knowledge matrix here");

  // generate
  auto* gen = app.add_subcommand("generate", "neologism candidates from morphemes");
  std::string morphemes_path, words_path, lexicon_words;
  std::size_t count = 10;
  std::uint64_t seed = 0;
  int order = 3;
  double alpha = 0.1;
  bool no_filter = false;
  semmem::neo::GenerateOptions gopt;
  gen->add_option("--morphemes", morphemes_path, "morpheme file, one per line")->required()->check(CLI::ExistingFile);
  gen->add_option("--words", words_path, "training word list (also the association lexicon)")
      ->required()
      ->check(CLI::ExistingFile);
  gen->add_option("--lexicon", lexicon_words, "extra known words to filter out")->check(CLI::ExistingFile);
  gen->add_option("--count", count, "candidates to return")->capture_default_str();
  gen->add_option("--seed", seed, "sampling seed")->capture_default_str();
  gen->add_option("--order", order, "character n-gram order")->capture_default_str();
  gen->add_option("--alpha", alpha, "additive smoothing")->capture_default_str();
  gen->add_option("--lambda", gopt.lambda, "weight of phonological score")->capture_default_str();
  gen->add_flag("--no-filter", no_filter, "keep candidates that are already words");

  // serve
  auto* serve = app.add_subcommand("serve", "HTTP/JSON service");
  std::string config_path;
  std::string s_triples, s_lexicon, s_synsets, s_reference, s_knowledge, s_data_dir, s_static, s_host;
  int s_port = 0;
  std::uint64_t s_seed = 0;
  serve->add_option("--config", config_path, "service config JSON")->check(CLI::ExistingFile);
  serve->add_option("--triples", s_triples, "relation triples (TSV)");
  serve->add_option("--lexicon", s_lexicon, "lexicon JSONL");
  serve->add_option("--synsets", s_synsets, "synset inventory JSONL");
  serve->add_option("--reference", s_reference, "reference corpus for synset counts");
  serve->add_option("--knowledge", s_knowledge, "knowledge matrix JSON");
  serve->add_option("--data-dir", s_data_dir, "session and knowledge logs");
  serve->add_option("--static-dir", s_static, "static files to serve at /");
  serve->add_option("--host", s_host, "bind address");
  serve->add_option("--port", s_port, "port");
  auto* seed_opt = serve->add_option("--seed", s_seed, "seed for session ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::optional<semmem::parallel::ScopedThreads> scoped;
    if (threads > 0) scoped.emplace(threads);

    if (*ingest) {
      const auto net = ingest_net.Load();
      if (!ingest_out.empty()) semmem::corpus::WriteFile(ingest_out, net.Serialize());
      std::cout << json{{"concepts", net.size()}, {"relations", net.relation_count()},
                        {"surfaces", net.surfaces().size()}}
                       .dump()
                << "\n";
    } else if (*enrich) {
      const auto net = enrich_net.Load();
      const auto docs = semmem::corpus::LoadCorpus(corpus_path);
      if (!relations.empty()) {
        std::stringstream ss(relations);
        std::string r;
        while (std::getline(ss, r, ',')) {
          if (!r.empty()) eopt.expansion.relation_types.insert(r);
        }
      }
      if (tau >= 0.0) eopt.expansion.tau = tau;
      eopt.expansion.metric = semmem::coset::ParseMetric(metric);
      eopt.pipeline.spelling = !no_spelling;
      const auto result = semmem::corpus::Enrich(docs, net, enrich_net.Stops(), eopt);
      Emit(enrich_out, semmem::corpus::EnhancedJsonl(docs, result.expansion.documents));
      if (!vectors_out.empty()) {
        semmem::corpus::WriteFile(vectors_out, semmem::corpus::VectorsToJson(result.vectors).dump(1) + "\n");
      }
      if (!baseline_out.empty()) {
        semmem::corpus::WriteFile(
            baseline_out, semmem::corpus::VectorsToJson(semmem::corpus::BaselineVectors(result.order0)).dump(1) + "\n");
      }
    } else if (*wsdc) {
      const auto net = wsd_net.Load();
      const auto stops = wsd_net.Stops();
      const std::string text = ReadText(wsd_text, wsd_input);
      const auto analyzed = semmem::text::Analyze(text, net, stops);
      json out;
      json mentions = json::array();
      for (const auto& m : analyzed.mentions) {
        mentions.push_back({{"surface", m.matched_surface}, {"candidates", m.candidates}});
      }
      out["mentions"] = mentions;
      if (!analyzed.mentions.empty()) {
        out["graph"] = semmem::wsd::ToJson(semmem::wsd::DisambiguateActivation(analyzed.mentions, net, wsd_act.cfg));
      } else {
        out["graph"] = nullptr;
      }
      if (!synsets_path.empty() && !reference_path.empty()) {
        const auto inventory = semmem::wsd::SynsetInventory::Load(synsets_path, net);
        const auto counts = semmem::wsd::BuildReferenceCounts(Lines(reference_path), inventory, net, stops);
        semmem::wsd::AnnotateOptions ao;
        ao.activation = wsd_act.cfg;
        json ann = json::array();
        for (const auto& a : semmem::wsd::AnnotateSynsets(text, counts, inventory, net, stops, ao)) {
          ann.push_back(semmem::wsd::ToJson(a));
        }
        out["counts"] = counts.ToJson();
        out["synsets"] = ann;
      }
      std::cout << out.dump(2) << "\n";
    } else if (*clusterc) {
      const auto table = semmem::corpus::LoadVectors(vectors_path);
      const auto points = semmem::corpus::ToPoints(table);
      std::map<std::string, std::string> gold;
      if (!gold_corpus.empty()) gold = semmem::corpus::GoldLabels(semmem::corpus::LoadCorpus(gold_corpus));
      const auto result = semmem::cluster::ClusterDocuments(points, k, gold.empty() ? nullptr : &gold);
      std::vector<semmem::plot::PlotPoint> plot;
      std::optional<semmem::mds::Embedding> emb;
      if (result.doc_ids.size() > 2) emb = semmem::mds::ClassicalMds(result.distances, 2);
      for (std::size_t i = 0; i < result.doc_ids.size(); ++i) {
        const auto& id = result.doc_ids[i];
        auto g = gold.find(id);
        plot.push_back({id, emb ? emb->at(i, 0) : 0.0, emb ? emb->at(i, 1) : 0.0, result.labels.at(id),
                        g == gold.end() ? std::string() : g->second});
      }
      semmem::plot::EmitPlot(plot, plot_prefix);
      std::cout << semmem::cluster::ToJson(result).dump() << "\n";
    } else if (*play) {
      gcfg.Validate();
      semmem::game::KnowledgeMatrix kb;
      if (!kb_path.empty()) {
        kb = semmem::game::KnowledgeMatrix::Load(kb_path);
      } else if (!play_net.triples.empty() && !play_net.lexicon.empty()) {
        kb = semmem::game::KnowledgeMatrix::FromNetwork(play_net.Load());
      } else {
        std::cerr << "play needs --knowledge or both --triples and --lexicon\n" << play->help();
        return 2;
      }
      return RunPlay(kb, gcfg, target, teach_out);
    } else if (*gen) {
      const auto morphemes = semmem::neo::LoadWordList(morphemes_path);
      const auto words = semmem::neo::LoadWordList(words_path);
      const auto model = semmem::neo::TrainNgram(words, order, alpha);
      auto candidates = semmem::neo::Generate(model, morphemes, count, seed, words, gopt);
      if (!no_filter) {
        std::set<std::string> known(words.begin(), words.end());
        if (!lexicon_words.empty()) {
          for (auto& w : semmem::neo::LoadWordList(lexicon_words)) known.insert(std::move(w));
        }
        candidates = semmem::neo::FilterNovel(std::move(candidates), known);
      }
      for (const auto& c : candidates) std::cout << semmem::neo::ToJson(c).dump() << "\n";
    } else if (*serve) {
      json flags = json::object();
      auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) flags[key] = v;
      };
      put("triples", s_triples);
      put("lexicon", s_lexicon);
      put("synsets", s_synsets);
      put("reference", s_reference);
      put("knowledge", s_knowledge);
      put("data_dir", s_data_dir);
      put("static_dir", s_static);
      put("host", s_host);
      if (s_port != 0) flags["port"] = s_port;
      if (*seed_opt) flags["session_seed"] = s_seed;
      std::optional<std::filesystem::path> file;
      if (!config_path.empty()) file = config_path;
      semmem::service::Service service(semmem::service::ResolveConfig(file, flags));
      g_service = &service;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      std::cerr << "semmem: serving " << service.network().size() << " concepts\n";
      service.Run();
      g_service = nullptr;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << semmem::ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
