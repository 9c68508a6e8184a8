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

#include "okb/corpus.h"

#include "okb/error.h"
#include "okb/text.h"

namespace okb {

namespace {

// Drops a leading "<digits><space>" marker from each line.
std::string strip_list_markers(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t line_start = 0;
  while (line_start <= raw.size()) {
    std::size_t line_end = raw.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = raw.size();
    std::string_view line = raw.substr(line_start, line_end - line_start);

    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t digits = i;
    while (digits < line.size() && line[digits] >= '0' && line[digits] <= '9') ++digits;
    if (digits > i && digits < line.size() &&
        (line[digits] == ' ' || line[digits] == '\t')) {
      line.remove_prefix(digits + 1);
    }
    out.append(line);
    if (line_end == raw.size()) break;
    out.push_back('\n');
    line_start = line_end + 1;
  }
  return out;
}

bool is_terminator(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "WORD";
    case TokenKind::kPunct: return "PUNCT";
    case TokenKind::kNum: return "NUM";
  }
  return "?";
}

std::string normalize_text(std::string_view raw) {
  const std::string stripped = strip_list_markers(raw);
  std::string out;
  out.reserve(stripped.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < stripped.size()) {
    const std::size_t start = pos;
    const char32_t c = text::decode_next(stripped, pos);
    if (text::is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(stripped, start, pos - start);
  }
  return out;
}

std::vector<Sentence> segment(std::string_view text) {
  std::vector<Sentence> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && text[begin] == ' ') ++begin;
    while (end > begin && text[end - 1] == ' ') --end;
    if (begin == end) return;
    Sentence s;
    s.index = sentences.size();
    s.offset = begin;
    s.text = std::string(text.substr(begin, end - begin));
    s.tokens = tokenize(s.text);
    sentences.push_back(std::move(s));
  };

  std::size_t sentence_start = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t c = text::decode_next(text, pos);
    if (!is_terminator(c)) continue;
    const std::size_t after = pos;
    if (after == text.size()) break;
    std::size_t probe = after;
    const char32_t next = text::decode_next(text, probe);
    if (!text::is_space(next)) continue;
    while (probe < text.size()) {
      std::size_t look = probe;
      const char32_t c2 = text::decode_next(text, look);
      if (!text::is_space(c2)) break;
      probe = look;
    }
    if (probe == text.size()) break;
    std::size_t look = probe;
    const char32_t first = text::decode_next(text, look);
    if ((text::is_word_letter(first) && text::is_upper(first)) || text::is_digit(first)) {
      emit(sentence_start, after);
      sentence_start = probe;
    }
  }
  emit(sentence_start, text.size());
  return sentences;
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < sentence.size()) {
    const std::size_t start = pos;
    const char32_t c = text::decode_next(sentence, pos);
    if (text::is_space(c)) continue;

    if (text::is_word_letter(c)) {
      // Extend over letters; an apostrophe or hyphen joins only when a letter
      // follows it directly.
      std::size_t end = pos;
      while (end < sentence.size()) {
        std::size_t look = end;
        const char32_t next = text::decode_next(sentence, look);
        if (text::is_word_letter(next)) {
          end = look;
          continue;
        }
        if (text::is_apostrophe(next) || next == U'-') {
          std::size_t after = look;
          if (after < sentence.size() &&
              text::is_word_letter(text::decode_next(sentence, after))) {
            end = look;
            continue;
          }
        }
        break;
      }
      pos = end;
      tokens.push_back({std::string(sentence.substr(start, end - start)), start, end,
                        TokenKind::kWord});
    } else if (text::is_digit(c)) {
      std::size_t end = pos;
      while (end < sentence.size() && sentence[end] >= '0' && sentence[end] <= '9') ++end;
      pos = end;
      tokens.push_back({std::string(sentence.substr(start, end - start)), start, end,
                        TokenKind::kNum});
    } else {
      tokens.push_back({std::string(sentence.substr(start, pos - start)), start, pos,
                        TokenKind::kPunct});
    }
  }
  return tokens;
}

Document ingest_document(std::string_view raw, std::string name, std::string id) {
  if (!text::is_valid_utf8(raw)) {
    throw Error(ErrorCode::kInvalid, "document is not valid UTF-8");
  }
  Document doc;
  doc.id = std::move(id);
  doc.name = std::move(name);
  doc.text = normalize_text(raw);
  if (doc.text.empty()) throw Error(ErrorCode::kInvalid, "empty document");
  doc.sentences = segment(doc.text);
  return doc;
}

const Document &Corpus::add(std::string_view raw, std::string name) {
  Document doc = ingest_document(raw, std::move(name), "d" + std::to_string(next_id_));
  ++next_id_;
  documents_.push_back(std::move(doc));
  return documents_.back();
}

const Document *Corpus::find(std::string_view id) const {
  for (const Document &doc : documents_) {
    if (doc.id == id) return &doc;
  }
  return nullptr;
}

}  // namespace okb
