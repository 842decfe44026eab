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


#include "semmem/synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>

#include "semmem/error.hpp"
#include "semmem/text_pipeline.hpp"

namespace semmem::synthetic {
namespace {

constexpr const char* kOnsets[] = {"b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z"};
constexpr const char* kVowels[] = {"a", "e", "i", "o", "u"};

class Namer {
 public:
  explicit Namer(std::mt19937_64& rng) : rng_(rng) {}

  // Fresh three-syllable word, never a stop word, never repeated.
  std::string Next() {
    for (;;) {
      std::string w;
      for (int s = 0; s < 3; ++s) {
        w += kOnsets[rng_() % std::size(kOnsets)];
        w += kVowels[rng_() % std::size(kVowels)];
      }
      w += kOnsets[rng_() % std::size(kOnsets)];
      if (text::DefaultStopList().contains(w)) continue;
      if (used_.insert(w).second) return w;
    }
  }

 private:
  std::mt19937_64& rng_;
  std::set<std::string> used_;
};

std::string Declare(const std::string& id) {
  nlohmann::json j = {{"id", id}, {"name", id}, {"forms", nlohmann::json::array()}, {"type", "synthetic"}};
  return j.dump() + "\n";
}

std::string Surface(const std::string& surface, const std::string& id) {
  nlohmann::json j = {{"surface", surface}, {"concept", id}, {"is_collocation", false}};
  return j.dump() + "\n";
}

std::string Triple(const std::string& s, const std::string& r, const std::string& t, double w) {
  return s + "\t" + r + "\t" + t + "\t" + std::to_string(w) + "\n";
}

}  // namespace

SyntheticCorpus Generate(const SyntheticSpec& spec) {
  if (spec.num_docs < 1 || spec.num_classes < 2 || spec.mids_per_class < 1 || spec.leaves_per_doc < 1 ||
      spec.noise_pool < 0 || spec.noise_per_doc < 0 || (spec.noise_per_doc > 0 && spec.noise_pool == 0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid synthetic corpus spec");
  }
  std::mt19937_64 rng(spec.seed);
  Namer namer(rng);
  SyntheticCorpus out;

  auto mid_id = [](int c, int m) { return "c" + std::to_string(c) + "/mid" + std::to_string(m); };
  for (int c = 0; c < spec.num_classes; ++c) {
    const std::string hub = "c" + std::to_string(c) + "/hub";
    out.lexicon += Declare(hub);
    for (int m = 0; m < spec.mids_per_class; ++m) {
      out.lexicon += Declare(mid_id(c, m));
      out.triples += Triple(mid_id(c, m), "is_a", hub, 1.0);
    }
  }

  std::vector<std::string> noise_words;
  for (int i = 0; i < spec.noise_pool; ++i) {
    const std::string id = "noise" + std::to_string(i);
    const std::string word = namer.Next();
    noise_words.push_back(word);
    out.lexicon += Surface(word, id);
    const int c = static_cast<int>(rng() % static_cast<unsigned>(spec.num_classes));
    const int m = static_cast<int>(rng() % static_cast<unsigned>(spec.mids_per_class));
    out.triples += Triple(id, "related_to", mid_id(c, m), spec.distractor_weight);
  }

  for (int d = 0; d < spec.num_docs; ++d) {
    const int c = d % spec.num_classes;
    std::vector<std::string> words;
    for (int l = 0; l < spec.leaves_per_doc; ++l) {
      const std::string id = "leaf" + std::to_string(d) + "_" + std::to_string(l);
      const std::string word = namer.Next();
      out.lexicon += Surface(word, id);
      const int m = static_cast<int>(rng() % static_cast<unsigned>(spec.mids_per_class));
      out.triples += Triple(id, "is_a", mid_id(c, m), 1.0);
      words.push_back(word);
    }
    for (int k = 0; k < spec.noise_per_doc; ++k) {
      words.push_back(noise_words[rng() % noise_words.size()]);
    }
    std::shuffle(words.begin(), words.end(), rng);
    std::string text;
    for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
    char id[16];
    std::snprintf(id, sizeof(id), "d%03d", d);
    out.docs.push_back(corpus::Document{id, "class" + std::to_string(c), text});
  }
  return out;
}

}  // namespace semmem::synthetic
