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

#include "semmem/text_pipeline.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <fstream>
#include <tuple>

#include "semmem/error.hpp"
#include "semmem/normalize.hpp"
#include "semmem/porter_stemmer.hpp"

namespace semmem {

std::vector<RawToken> Tokenize(std::string_view text) {
  if (!IsValidUtf8(text)) throw Error(ErrorCode::kParse, "text is not valid UTF-8");
  std::vector<RawToken> out;
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t len = static_cast<int32_t>(text.size());
  int32_t i = 0;
  int32_t start = -1;
  auto flush = [&](int32_t end) {
    if (start < 0) return;
    std::string_view piece = text.substr(static_cast<size_t>(start), static_cast<size_t>(end - start));
    out.push_back(RawToken{NormalizeId(piece), static_cast<size_t>(start), static_cast<size_t>(end)});
    start = -1;
  };
  while (i < len) {
    int32_t at = i;
    UChar32 c;
    U8_NEXT(s, i, len, c);
    bool word_char = u_isalnum(c) || (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0 || c == '\'' ||
                     c == 0x2019;
    if (word_char) {
      if (start < 0) start = at;
    } else {
      flush(at);
    }
  }
  flush(len);
  return out;
}

namespace text {
namespace {

std::u32string ToCodePoints(std::string_view s) {
  std::u32string out;
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(p, i, len, c);
    out.push_back(static_cast<char32_t>(c < 0 ? 0xFFFD : c));
  }
  return out;
}

int Levenshtein(const std::u32string& a, const std::u32string& b) {
  std::vector<int> prev(b.size() + 1);
  std::vector<int> cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<ConceptId> Ids(const SemanticNetwork& net, const std::vector<ConceptIndex>& idx) {
  std::vector<ConceptId> out;
  out.reserve(idx.size());
  for (ConceptIndex i : idx) out.push_back(net.id_at(i));
  return out;
}

}  // namespace

const StopList& DefaultStopList() {
  static const StopList kList = {
      "a",    "an",   "the",  "is",    "are",  "was",  "were", "be",    "been",  "being",
      "am",   "of",   "in",   "on",    "at",   "to",   "for",  "with",  "by",    "from",
      "into", "onto", "over", "under", "about", "as",  "and",  "or",    "but",   "it",
      "its",  "this", "that", "these", "those", "can", "could", "will", "would", "do",
      "does", "did",  "has",  "have",  "had",  "than", "then", "so",    "such",  "there"};
  return kList;
}

StopList LoadStopList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open stop list " + path.string());
  StopList list;
  std::string line;
  while (std::getline(in, line)) {
    std::string s = NormalizeSurface(line);
    if (s.empty() || s[0] == '#') continue;
    list.insert(std::move(s));
  }
  return list;
}

std::vector<Token> Preprocess(std::string_view text, const StopList& stoplist) {
  std::vector<Token> out;
  std::vector<RawToken> raw = Tokenize(text);
  for (size_t pos = 0; pos < raw.size(); ++pos) {
    RawToken& r = raw[pos];
    if (stoplist.contains(r.surface)) continue;
    Token t;
    t.stem = PorterStem(r.surface);
    t.surface = std::move(r.surface);
    t.position = pos;
    t.begin = r.begin;
    t.end = r.end;
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<ConceptMention> MapConcepts(std::span<const Token> tokens, const SemanticNetwork& net,
                                        std::size_t max_senses) {
  std::vector<ConceptMention> out;
  const size_t n = tokens.size();
  size_t i = 0;
  while (i < n) {
    bool matched = false;
    const size_t longest = std::min(net.max_collocation_tokens(), n - i);
    for (size_t len = longest; len >= 2; --len) {
      std::string key;
      std::string surface;
      for (size_t k = i; k < i + len; ++k) {
        if (k > i) {
          key.push_back(' ');
          surface.push_back(' ');
        }
        key += tokens[k].stem;
        surface += tokens[k].surface;
      }
      std::vector<ConceptIndex> ids = net.LookupCollocation(key);
      if (ids.empty() || ids.size() > max_senses) continue;
      out.push_back(ConceptMention{i, i + len, surface, Ids(net, ids), std::nullopt, false});
      i += len;
      matched = true;
      break;
    }
    if (matched) continue;
    std::vector<ConceptIndex> ids = net.LookupIndices(tokens[i].surface);
    if (ids.empty()) ids = net.LookupStem(tokens[i].stem);
    if (!ids.empty() && ids.size() <= max_senses) {
      out.push_back(ConceptMention{i, i + 1, tokens[i].surface, Ids(net, ids), std::nullopt, false});
    }
    ++i;
  }
  return out;
}

int EditDistance(std::string_view a, std::string_view b) {
  return Levenshtein(ToCodePoints(a), ToCodePoints(b));
}

std::vector<SpellingSuggestion> SuggestSpelling(std::string_view token,
                                                const activation::ActivationVector& context,
                                                const SemanticNetwork& net, int max_edits) {
  const std::string norm = NormalizeSurface(token);
  if (net.IsKnownSurface(norm)) {
    throw Error(ErrorCode::kAlreadyKnown, "'" + norm + "' is already a lexicon surface");
  }
  std::vector<SpellingSuggestion> out;
  const std::u32string target = ToCodePoints(norm);
  if (target.empty()) return out;
  for (const auto& [surface, ids] : net.surfaces()) {
    if (surface.find(' ') != std::string::npos) continue;
    std::u32string cand = ToCodePoints(surface);
    if (cand.empty() || cand[0] != target[0]) continue;
    const size_t diff = cand.size() > target.size() ? cand.size() - target.size()
                                                    : target.size() - cand.size();
    if (diff > static_cast<size_t>(max_edits)) continue;
    int d = Levenshtein(target, cand);
    if (d > max_edits) continue;
    double score = 0.0;
    for (ConceptIndex i : ids) {
      auto it = context.find(net.id_at(i));
      if (it != context.end()) score += it->second;
    }
    out.push_back(SpellingSuggestion{surface, score, d});
  }
  std::sort(out.begin(), out.end(), [](const SpellingSuggestion& a, const SpellingSuggestion& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.distance, a.surface) < std::tie(b.distance, b.surface);
  });
  return out;
}

AnalyzedText Analyze(std::string_view text, const SemanticNetwork& net, const StopList& stoplist,
                     const PipelineOptions& options, const activation::ActivationVector& context) {
  AnalyzedText result;
  std::vector<Token> tokens = Preprocess(text, stoplist);
  if (!options.rewrites.empty()) {
    std::vector<Token> rewritten;
    for (Token& t : tokens) {
      auto it = options.rewrites.find(t.surface);
      if (it == options.rewrites.end()) {
        rewritten.push_back(std::move(t));
        continue;
      }
      for (const RawToken& r : Tokenize(it->second)) {
        if (stoplist.contains(r.surface)) continue;
        rewritten.push_back(Token{r.surface, t.position, t.begin, t.end, PorterStem(r.surface)});
      }
    }
    tokens = std::move(rewritten);
  }

  std::vector<ConceptMention> mapped = MapConcepts(tokens, net, options.max_senses);
  std::vector<bool> covered(tokens.size(), false);
  for (const ConceptMention& m : mapped) {
    for (size_t k = m.token_begin; k < m.token_end; ++k) covered[k] = true;
  }

  std::vector<ConceptMention> mentions;
  size_t next_mapped = 0;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (next_mapped < mapped.size() && mapped[next_mapped].token_begin == i) {
      mentions.push_back(std::move(mapped[next_mapped++]));
      continue;
    }
    if (covered[i]) continue;
    const Token& t = tokens[i];
    // Known but too ambiguous: not a spelling problem.
    if (net.IsKnownSurface(t.surface) || !net.LookupStem(t.stem).empty()) {
      result.dropped.push_back(i);
      continue;
    }
    bool repaired = false;
    if (options.spelling) {
      auto suggestions = SuggestSpelling(t.surface, context, net, options.max_edits);
      if (!suggestions.empty()) {
        std::vector<ConceptIndex> ids = net.LookupIndices(suggestions.front().surface);
        if (!ids.empty() && ids.size() <= options.max_senses) {
          mentions.push_back(
              ConceptMention{i, i + 1, suggestions.front().surface, Ids(net, ids), std::nullopt, true});
          repaired = true;
        }
      }
    }
    if (!repaired) result.dropped.push_back(i);
  }
  result.tokens = std::move(tokens);
  result.mentions = std::move(mentions);
  return result;
}

}  // namespace text
}  // namespace semmem
