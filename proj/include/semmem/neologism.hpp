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

#ifndef SEMMEM_NEOLOGISM_HPP_
#define SEMMEM_NEOLOGISM_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace semmem::neo {

// Word boundary markers. They sit below the printable range so they never
// collide with characters of real words.
inline constexpr char32_t kBegin = 0x02;
inline constexpr char32_t kEnd = 0x03;

// Character n-gram model over code points. Words are padded on the left
// with n-1 kBegin markers and terminated by kEnd; the alphabet is every
// code point seen in training plus kEnd.
class NgramModel {
 public:
  NgramModel() = default;

  int order() const { return n_; }
  double alpha() const { return alpha_; }
  const std::set<char32_t>& alphabet() const { return alphabet_; }
  std::uint64_t Count(const std::u32string& context, char32_t c) const;
  std::uint64_t ContextTotal(const std::u32string& context) const;

  // (count + alpha) / (total + alpha * |alphabet|); 0 when that is 0/0.
  double Probability(const std::u32string& context, char32_t c) const;
  // Mean natural-log probability per predicted symbol, end marker
  // included. -inf when some symbol has probability 0.
  double LogProb(std::string_view word) const;

  void Add(std::string_view word);

  friend NgramModel TrainNgram(std::span<const std::string> words, int n, double alpha);

 private:
  int n_ = 2;
  double alpha_ = 0.0;
  std::set<char32_t> alphabet_;
  std::map<std::u32string, std::map<char32_t, std::uint64_t>> counts_;
  std::map<std::u32string, std::uint64_t> totals_;
};

// Throws kInvalidArgument for an empty word list, n < 2 or alpha < 0.
NgramModel TrainNgram(std::span<const std::string> words, int n, double alpha);

struct Candidate {
  std::string word;
  std::vector<std::string> parts;
  double logp = 0.0;
  std::size_t assoc = 0;
  double score = 0.0;
};

struct GenerateOptions {
  double lambda = 0.5;
  // Above this many ordered combinations, sample this many instead.
  std::size_t max_enumerate = 20000;
};

// Number of lexicon words containing at least one of `parts` as a substring.
std::size_t Association(std::span<const std::string> parts, std::span<const std::string> lexicon);

// Min-max scaled combination; a constant column scales to 0. Non-finite
// logp values are left out of the scaling and score -inf.
void ScoreBatch(std::vector<Candidate>& batch, double lambda);

// Ordered concatenations of 2 or 3 distinct morphemes. Sampling uses
// mt19937_64(seed). Result is the top `count` by score, ties broken by word.
// Throws kInvalidArgument for fewer than 2 distinct morphemes or count < 1.
std::vector<Candidate> Generate(const NgramModel& model, std::span<const std::string> morphemes,
                                std::size_t count, std::uint64_t seed, std::span<const std::string> lexicon,
                                const GenerateOptions& options = {});

std::vector<Candidate> FilterNovel(std::vector<Candidate> candidates, const std::set<std::string>& lexicon);

nlohmann::json ToJson(const Candidate& c);
// One entry per non-empty line, trimmed; '#' starts a comment line.
std::vector<std::string> LoadWordList(const std::filesystem::path& path);

}  // namespace semmem::neo

#endif  // SEMMEM_NEOLOGISM_HPP_
