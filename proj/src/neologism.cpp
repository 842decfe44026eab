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


#include "semmem/neologism.hpp"

#include <unicode/utf8.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>

#include "semmem/error.hpp"
#include "semmem/normalize.hpp"

namespace semmem::neo {
namespace {

std::u32string Decode(std::string_view s) {
  if (!IsValidUtf8(s)) throw Error(ErrorCode::kParse, "invalid UTF-8 word");
  std::u32string out;
  const auto* p = reinterpret_cast<const uint8_t*>(s.data());
  const int32_t len = static_cast<int32_t>(s.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(p, i, len, c);
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::u32string Padded(std::string_view word, int n) {
  std::u32string out(static_cast<std::size_t>(n - 1), kBegin);
  out += Decode(word);
  out.push_back(kEnd);
  return out;
}

}  // namespace

std::uint64_t NgramModel::Count(const std::u32string& context, char32_t c) const {
  auto it = counts_.find(context);
  if (it == counts_.end()) return 0;
  auto jt = it->second.find(c);
  return jt == it->second.end() ? 0 : jt->second;
}

std::uint64_t NgramModel::ContextTotal(const std::u32string& context) const {
  auto it = totals_.find(context);
  return it == totals_.end() ? 0 : it->second;
}

double NgramModel::Probability(const std::u32string& context, char32_t c) const {
  const double num = static_cast<double>(Count(context, c)) + alpha_;
  const double den = static_cast<double>(ContextTotal(context)) + alpha_ * static_cast<double>(alphabet_.size());
  if (den <= 0.0) return 0.0;
  return num / den;
}

double NgramModel::LogProb(std::string_view word) const {
  const std::u32string s = Padded(word, n_);
  const std::size_t ctx = static_cast<std::size_t>(n_ - 1);
  double sum = 0.0;
  std::size_t symbols = 0;
  for (std::size_t i = ctx; i < s.size(); ++i) {
    const double p = Probability(s.substr(i - ctx, ctx), s[i]);
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    sum += std::log(p);
    ++symbols;
  }
  return sum / static_cast<double>(symbols);
}

void NgramModel::Add(std::string_view word) {
  const std::u32string s = Padded(word, n_);
  const std::size_t ctx = static_cast<std::size_t>(n_ - 1);
  for (std::size_t i = ctx; i < s.size(); ++i) {
    std::u32string context = s.substr(i - ctx, ctx);
    ++counts_[context][s[i]];
    ++totals_[context];
    alphabet_.insert(s[i]);
  }
}

NgramModel TrainNgram(std::span<const std::string> words, int n, double alpha) {
  if (words.empty()) throw Error(ErrorCode::kInvalidArgument, "empty word list");
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "n-gram order must be >= 2");
  if (!(alpha >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "smoothing must be >= 0");
  NgramModel m;
  m.n_ = n;
  m.alpha_ = alpha;
  for (const auto& w : words) m.Add(w);
  return m;
}

std::size_t Association(std::span<const std::string> parts, std::span<const std::string> lexicon) {
  std::size_t n = 0;
  for (const auto& word : lexicon) {
    for (const auto& part : parts) {
      if (!part.empty() && word.find(part) != std::string::npos) {
        ++n;
        break;
      }
    }
  }
  return n;
}

void ScoreBatch(std::vector<Candidate>& batch, double lambda) {
  double lo_p = std::numeric_limits<double>::infinity();
  double hi_p = -lo_p;
  double lo_a = lo_p;
  double hi_a = -lo_p;
  for (const auto& c : batch) {
    if (std::isfinite(c.logp)) {
      lo_p = std::min(lo_p, c.logp);
      hi_p = std::max(hi_p, c.logp);
    }
    lo_a = std::min(lo_a, static_cast<double>(c.assoc));
    hi_a = std::max(hi_a, static_cast<double>(c.assoc));
  }
  auto scale = [](double x, double lo, double hi) { return hi > lo ? (x - lo) / (hi - lo) : 0.0; };
  for (auto& c : batch) {
    if (!std::isfinite(c.logp)) {
      c.score = -std::numeric_limits<double>::infinity();
      continue;
    }
    c.score = lambda * scale(c.logp, lo_p, hi_p) +
              (1.0 - lambda) * scale(static_cast<double>(c.assoc), lo_a, hi_a);
  }
}

std::vector<Candidate> Generate(const NgramModel& model, std::span<const std::string> morphemes,
                                std::size_t count, std::uint64_t seed, std::span<const std::string> lexicon,
                                const GenerateOptions& options) {
  std::vector<std::string> m(morphemes.begin(), morphemes.end());
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  m.erase(std::remove(m.begin(), m.end(), std::string()), m.end());
  if (m.size() < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 distinct morphemes");
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "count must be >= 1");
  if (!(options.lambda >= 0.0 && options.lambda <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must lie in [0, 1]");
  }

  const std::size_t k = m.size();
  const double pairs = static_cast<double>(k) * static_cast<double>(k - 1);
  const double triples = pairs * static_cast<double>(k - 2);
  std::vector<std::vector<std::size_t>> combos;
  if (pairs + triples <= static_cast<double>(options.max_enumerate)) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (b == a) continue;
        combos.push_back({a, b});
        for (std::size_t c = 0; c < k; ++c) {
          if (c != a && c != b) combos.push_back({a, b, c});
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::set<std::vector<std::size_t>> seen;
    const double p_pair = pairs / (pairs + triples);
    while (seen.size() < options.max_enumerate) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const std::size_t len = u < p_pair ? 2 : 3;
      std::vector<std::size_t> pick;
      while (pick.size() < len) {
        const std::size_t x = static_cast<std::size_t>(rng() % k);
        if (std::find(pick.begin(), pick.end(), x) == pick.end()) pick.push_back(x);
      }
      if (seen.insert(pick).second) combos.push_back(std::move(pick));
    }
  }

  std::vector<Candidate> batch(combos.size());
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < combos.size(); ++i) {
    Candidate& c = batch[i];
    for (std::size_t idx : combos[i]) {
      c.parts.push_back(m[idx]);
      c.word += m[idx];
    }
    c.logp = model.LogProb(c.word);
    c.assoc = Association(c.parts, lexicon);
  }

  // Different splits can spell the same word; keep the best-associated one.
  std::sort(batch.begin(), batch.end(), [](const Candidate& a, const Candidate& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.assoc > b.assoc;
  });
  batch.erase(std::unique(batch.begin(), batch.end(),
                          [](const Candidate& a, const Candidate& b) { return a.word == b.word; }),
              batch.end());

  ScoreBatch(batch, options.lambda);
  std::stable_sort(batch.begin(), batch.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score > b.score; });
  if (batch.size() > count) batch.resize(count);
  return batch;
}

std::vector<Candidate> FilterNovel(std::vector<Candidate> candidates, const std::set<std::string>& lexicon) {
  std::erase_if(candidates, [&](const Candidate& c) { return lexicon.contains(c.word); });
  return candidates;
}

nlohmann::json ToJson(const Candidate& c) {
  auto num = [](double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); };
  return {{"word", c.word}, {"logp", num(c.logp)}, {"assoc", c.assoc}, {"score", num(c.score)}};
}

std::vector<std::string> LoadWordList(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string w = NormalizeSurface(line);
    if (w.empty() || w[0] == '#') continue;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace semmem::neo
