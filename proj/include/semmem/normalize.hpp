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

#ifndef SEMMEM_NORMALIZE_HPP_
#define SEMMEM_NORMALIZE_HPP_

#include <string>
#include <string_view>

namespace semmem {

// NFC, lowercase, internal whitespace runs collapsed to one space, trimmed.
// Throws Error(kParse) on invalid UTF-8.
std::string NormalizeSurface(std::string_view text);

// NFC + lowercase only. Used for concept ids, which may not contain spaces.
std::string NormalizeId(std::string_view text);

bool ContainsWhitespace(std::string_view text);

bool IsValidUtf8(std::string_view text);

}  // namespace semmem

#endif  // SEMMEM_NORMALIZE_HPP_
