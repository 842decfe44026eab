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

#ifndef SEMMEM_TEXT_PIPELINE_HPP_
#define SEMMEM_TEXT_PIPELINE_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semmem/activation.hpp"
#include "semmem/ontology.hpp"
#include "semmem/tokenizer.hpp"

namespace semmem::text {

struct Token {
  std::string surface;
  std::size_t position = 0;  // index before stop-word removal
  std::size_t begin = 0;     // byte span in the source text
  std::size_t end = 0;
  std::string stem;
};

using StopList = std::set<std::string, std::less<>>;

// Articles, copulas, auxiliaries, prepositions and conjunctions.
const StopList& DefaultStopList();
// One surface per line; blank lines and '#' comments are ignored.
StopList LoadStopList(const std::filesystem::path& path);

std::vector<Token> Preprocess(std::string_view text, const StopList& stoplist);

struct ConceptMention {
  std::size_t token_begin = 0;  // [token_begin, token_end) into the token list
  std::size_t token_end = 0;
  std::string matched_surface;
  std::vector<ConceptId> candidates;  // sorted, non-empty
  std::optional<ConceptId> chosen;
  bool spelling_corrected = false;
};

constexpr std::size_t kDefaultMaxSenses = 8;
constexpr int kDefaultMaxEdits = 2;

// Greedy left-to-right: the longest collocation (matched on stems) first,
// then single-token lookup by surface and, failing that, by stem. Mentions
// with more than `max_senses` candidates are dropped.
std::vector<ConceptMention> MapConcepts(std::span<const Token> tokens, const SemanticNetwork& net,
                                        std::size_t max_senses = kDefaultMaxSenses);

struct SpellingSuggestion {
  std::string surface;
  double score = 0.0;  // summed context activation of the surface's concepts
  int distance = 0;

  bool operator==(const SpellingSuggestion&) const = default;
};

// Lexicon surfaces within `max_edits` Levenshtein edits that keep the first
// letter, ordered by score desc, distance asc, surface asc. Throws
// Error(kAlreadyKnown) when `token` is itself a lexicon surface.
std::vector<SpellingSuggestion> SuggestSpelling(std::string_view token,
                                                const activation::ActivationVector& context,
                                                const SemanticNetwork& net,
                                                int max_edits = kDefaultMaxEdits);

// Levenshtein distance over code points.
int EditDistance(std::string_view a, std::string_view b);

struct PipelineOptions {
  std::size_t max_senses = kDefaultMaxSenses;
  int max_edits = kDefaultMaxEdits;
  bool spelling = true;
  // Optional surface -> surface rewrites applied before mapping (acronym
  // expansion hook). The replacement may span several tokens.
  std::map<std::string, std::string, std::less<>> rewrites;
};

struct AnalyzedText {
  std::vector<Token> tokens;
  std::vector<ConceptMention> mentions;
  std::vector<std::size_t> dropped;  // token indices neither mapped nor corrected
};

// Preprocess, rewrite, map, then repair unknown tokens through
// SuggestSpelling; anything still unrecognized is dropped.
AnalyzedText Analyze(std::string_view text, const SemanticNetwork& net, const StopList& stoplist,
                     const PipelineOptions& options = {},
                     const activation::ActivationVector& context = {});

}  // namespace semmem::text

#endif  // SEMMEM_TEXT_PIPELINE_HPP_
