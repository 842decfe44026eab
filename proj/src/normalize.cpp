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

#include "semmem/normalize.hpp"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "semmem/error.hpp"

namespace semmem {
namespace {

std::string NfcLower(std::string_view text) {
  if (!IsValidUtf8(text)) {
    throw Error(ErrorCode::kParse, "invalid UTF-8 input");
  }
  // ASCII fast path; NFC is the identity on ASCII.
  bool ascii = true;
  for (unsigned char c : text) {
    if (c >= 0x80) {
      ascii = false;
      break;
    }
  }
  if (ascii) {
    std::string out(text);
    for (char& c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kInvalidArgument, "ICU NFC normalizer unavailable");
  }
  icu::UnicodeString ustr = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  ustr = nfc->normalize(ustr, status);
  ustr.toLower(icu::Locale::getRoot());
  // Lowercasing can denormalize a few sequences.
  ustr = nfc->normalize(ustr, status);
  if (U_FAILURE(status)) {
    throw Error(ErrorCode::kParse, "normalization failed");
  }
  std::string out;
  ustr.toUTF8String(out);
  return out;
}

}  // namespace

bool IsValidUtf8(std::string_view text) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  int32_t len = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(s, i, len, c);
    if (c < 0) return false;
  }
  return true;
}

bool ContainsWhitespace(std::string_view text) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  int32_t len = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < len) {
    UChar32 c;
    U8_NEXT(s, i, len, c);
    if (c >= 0 && u_isUWhiteSpace(c)) return true;
  }
  return false;
}

std::string NormalizeId(std::string_view text) { return NfcLower(text); }

std::string NormalizeSurface(std::string_view text) {
  std::string lowered = NfcLower(text);
  std::string out;
  out.reserve(lowered.size());
  const auto* s = reinterpret_cast<const uint8_t*>(lowered.data());
  int32_t len = static_cast<int32_t>(lowered.size());
  int32_t i = 0;
  bool pending_space = false;
  while (i < len) {
    int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, len, c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.append(lowered, static_cast<size_t>(start), static_cast<size_t>(i - start));
  }
  return out;
}

}  // namespace semmem
