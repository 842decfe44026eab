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

#ifndef SEMMEM_PORTER_STEMMER_HPP_
#define SEMMEM_PORTER_STEMMER_HPP_

#include <string>
#include <string_view>

namespace semmem {

// Classic Porter stemmer, following the author's reference C release
// (including its "bli" -> "ble" and "logi" -> "log" rules). Input is
// expected lowercase. Words that are not purely a-z, or are at most two
// characters long, are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace semmem

#endif  // SEMMEM_PORTER_STEMMER_HPP_
