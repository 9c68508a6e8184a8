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

#ifndef OKB_TEXT_H_
#define OKB_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

// UTF-8 helpers. Classification is restricted to what the tokenizer and the
// lexicon need: Cyrillic and Latin letters, apostrophes, decimal digits.
namespace okb::text {

inline constexpr char32_t kInvalidCodePoint = 0xFFFD;

// Decodes the code point starting at `pos` and advances `pos` past it.
// Malformed sequences yield kInvalidCodePoint and advance by one byte.
char32_t decode_next(std::string_view s, std::size_t &pos);

void append_utf8(std::string &out, char32_t c);

bool is_valid_utf8(std::string_view s);

bool is_word_letter(char32_t c);
bool is_apostrophe(char32_t c);
bool is_digit(char32_t c);
bool is_space(char32_t c);
bool is_upper(char32_t c);

// Case-folds a string and maps the typographic apostrophe U+2019 to U+0027 so
// that "комп’ютер" and "Комп'ютер" share one dictionary key.
std::string fold_case(std::string_view s);

// True for 2..6 code points that are all uppercase letters ("ПК", "OWL").
bool has_abbreviation_shape(std::string_view s);

std::size_t code_point_count(std::string_view s);

}  // namespace okb::text

#endif  // OKB_TEXT_H_
