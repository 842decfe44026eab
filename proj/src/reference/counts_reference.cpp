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


#include <algorithm>

#include "semmem/error.hpp"
#include "semmem/reference.hpp"

namespace semmem::reference {

wsd::SynsetCountTable BuildReferenceCounts(std::span<const std::string> reference,
                                           const wsd::SynsetInventory& synsets, const SemanticNetwork& net,
                                           const text::StopList& stoplist, const wsd::ReferenceOptions& options) {
  if (reference.empty()) throw Error(ErrorCode::kEmptyReferenceCorpus, "reference corpus is empty");
  wsd::SynsetCountTable table;
  table.source = "reference";
  for (const auto& s : synsets.synsets()) table.counts[s.id] = 0;
  for (const auto& text : reference) {
    const auto analyzed = text::Analyze(text, net, stoplist, options.pipeline);
    for (const auto& m : analyzed.mentions) {
      std::vector<ConceptId> seen = m.chosen ? std::vector<ConceptId>{*m.chosen} : m.candidates;
      for (const auto& c : seen) {
        ++table.occurrences;
        for (const auto& s : synsets.synsets()) {
          if (std::find(s.members.begin(), s.members.end(), c) != s.members.end()) ++table.counts[s.id];
        }
      }
    }
  }
  return table;
}

}  // namespace semmem::reference
