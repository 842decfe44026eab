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

#ifndef SEMMEM_TOKENIZER_HPP_
#define SEMMEM_TOKENIZER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace semmem {

struct RawToken {
  std::string surface;  // lowercased, NFC
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;
};

// Maximal runs of letters, digits and apostrophes. Throws on invalid UTF-8.
std::vector<RawToken> Tokenize(std::string_view text);

}  // namespace semmem

#endif  // SEMMEM_TOKENIZER_HPP_
