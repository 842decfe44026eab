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


#ifndef SEMMEM_SYNTHETIC_HPP_
#define SEMMEM_SYNTHETIC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semmem/corpus_io.hpp"

namespace semmem::synthetic {

// Labeled corpus whose class signal lives only in the network: every
// document mentions its own private leaf concepts (no surface is shared by
// two documents), each leaf hangs below a class "mid" concept, and mids hang
// below one hub per class. Shared noise words appear in every class and
// carry distractor links into random classes.
struct SyntheticSpec {
  int num_docs = 120;
  int num_classes = 3;
  int mids_per_class = 4;
  int leaves_per_doc = 4;
  int noise_pool = 30;
  int noise_per_doc = 4;
  double distractor_weight = 0.5;
  std::uint64_t seed = 1;
};

struct SyntheticCorpus {
  std::string triples;  // TSV
  std::string lexicon;  // JSONL
  std::vector<corpus::Document> docs;
};

// Deterministic for a given spec (mt19937_64 seeded with spec.seed).
SyntheticCorpus Generate(const SyntheticSpec& spec);

}  // namespace semmem::synthetic

#endif  // SEMMEM_SYNTHETIC_HPP_
