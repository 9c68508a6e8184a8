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

#ifndef OKB_CORPUS_H_
#define OKB_CORPUS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace okb {

enum class TokenKind { kWord, kPunct, kNum };

std::string_view to_string(TokenKind kind);

// Offsets are UTF-8 byte offsets into the owning sentence's text.
struct Token {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token &) const = default;
};

struct Sentence {
  std::size_t index = 0;   // 0-based ordinal within the document
  std::size_t offset = 0;  // byte offset of `text` in the document text
  std::string text;
  std::vector<Token> tokens;

  bool operator==(const Sentence &) const = default;
};

struct Document {
  std::string id;
  std::string name;
  std::string text;  // normalized
  std::vector<Sentence> sentences;

  bool operator==(const Document &) const = default;
};

// Strips "12 "-style list markers at line starts, collapses whitespace runs
// to single spaces and trims.
std::string normalize_text(std::string_view raw);

// Splits after '.', '!' or '?' when followed by whitespace and an uppercase
// letter or digit, or by the end of text. Sentences come back tokenized.
std::vector<Sentence> segment(std::string_view text);

// WORD: maximal run of Cyrillic/Latin letters with internal apostrophes and
// hyphens. NUM: run of decimal digits. Any other non-space code point is a
// single PUNCT token.
std::vector<Token> tokenize(std::string_view sentence);

// Throws okb::Error("empty document") when nothing is left after
// normalization, and on invalid UTF-8.
Document ingest_document(std::string_view raw, std::string name, std::string id = {});

// Ordered document collection with sequential ids "d1", "d2", ...
class Corpus {
 public:
  const Document &add(std::string_view raw, std::string name);

  const std::vector<Document> &documents() const { return documents_; }
  const Document *find(std::string_view id) const;

 private:
  std::vector<Document> documents_;
  std::size_t next_id_ = 1;
};

}  // namespace okb

#endif  // OKB_CORPUS_H_
