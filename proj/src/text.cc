// Copyright 2026 The OKB Authors.
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

#include "okb/text.h"

#include <unicode/uchar.h>
#include <unicode/uscript.h>
#include <unicode/utf8.h>

namespace okb::text {

char32_t decode_next(std::string_view s, std::size_t &pos) {
  if (pos >= s.size()) return kInvalidCodePoint;
  int32_t i = static_cast<int32_t>(pos);
  const int32_t length = static_cast<int32_t>(s.size());
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t *>(s.data()), i, length, c);
  pos = static_cast<std::size_t>(i);
  return c < 0 ? kInvalidCodePoint : static_cast<char32_t>(c);
}

void append_utf8(std::string &out, char32_t c) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(c), error);
  if (error) {
    append_utf8(out, kInvalidCodePoint);
    return;
  }
  out.append(reinterpret_cast<const char *>(buf), static_cast<std::size_t>(n));
}

bool is_valid_utf8(std::string_view s) {
  int32_t i = 0;
  const int32_t length = static_cast<int32_t>(s.size());
  while (i < length) {
    UChar32 c;
    U8_NEXT(reinterpret_cast<const uint8_t *>(s.data()), i, length, c);
    if (c < 0) return false;
  }
  return true;
}

bool is_word_letter(char32_t c) {
  const UChar32 cp = static_cast<UChar32>(c);
  if (!u_isalpha(cp)) return false;
  UErrorCode status = U_ZERO_ERROR;
  const UScriptCode script = uscript_getScript(cp, &status);
  if (U_FAILURE(status)) return false;
  return script == USCRIPT_CYRILLIC || script == USCRIPT_LATIN;
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool is_upper(char32_t c) { return u_isupper(static_cast<UChar32>(c)); }

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t c = decode_next(s, pos);
    if (c == U'’') c = U'\'';
    append_utf8(out, static_cast<char32_t>(
                         u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT)));
  }
  return out;
}

bool has_abbreviation_shape(std::string_view s) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t c = decode_next(s, pos);
    if (!is_word_letter(c) || !is_upper(c)) return false;
    ++count;
  }
  return count >= 2 && count <= 6;
}

std::size_t code_point_count(std::string_view s) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    decode_next(s, pos);
    ++count;
  }
  return count;
}

}  // namespace okb::text
