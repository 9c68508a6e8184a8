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

#ifndef OKB_LEXICON_H_
#define OKB_LEXICON_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace okb {

enum class Pos { kNoun, kAdj, kVerb, kConj, kPrep, kPron, kNum, kPart, kAdv, kAbbr };
enum class Case { kNom, kGen, kDat, kAcc, kIns, kLoc, kVoc };
enum class Number { kSg, kPl };
enum class Gender { kM, kF, kN };

std::string_view to_string(Pos pos);
std::string_view to_string(Case c);
std::string_view to_string(Number n);
std::string_view to_string(Gender g);
std::optional<Pos> parse_pos(std::string_view s);

// Morphological features of one word form. Any subset may be absent; an
// absent feature never blocks agreement.
struct Features {
  std::optional<Case> grammatical_case;
  std::optional<Number> number;
  std::optional<Gender> gender;

  bool empty() const { return !grammatical_case && !number && !gender; }

  // True when every feature specified on both sides has the same value.
  bool agrees_with(const Features &other) const;

  // "case=gen,number=sg,gender=f"; keys in that fixed order.
  std::string to_string() const;

  // Parses a comma-separated k=v list. Throws okb::Error on unknown keys or
  // values and on repeated keys.
  static Features parse(std::string_view s);

  bool operator==(const Features &) const = default;
};

struct LexEntry {
  std::string surface;  // case-folded
  std::string lemma;
  Pos pos = Pos::kNoun;
  Features features;

  bool operator==(const LexEntry &) const = default;
};

struct Lemmatized {
  std::string lemma;
  Pos pos;

  bool operator==(const Lemmatized &) const = default;
};

// Word-form dictionary. Immutable once loaded; all queries are const.
class Lexicon {
 public:
  // Adds an entry unless an identical (surface, lemma, pos, features) row is
  // already present. The surface is case-folded on the way in.
  void add(LexEntry entry);

  // Appends every entry of `other` (dedup applies) and its source names.
  void merge(const Lexicon &other);

  void add_source(std::string name) { sources_.push_back(std::move(name)); }

  // Case-folded exact match, entries in file order. Empty when absent.
  const std::vector<LexEntry> &lookup(std::string_view surface) const;

  // First dictionary entry, or the abbreviation/noun fallback.
  Lemmatized lemmatize(std::string_view surface) const;

  // Reverse lookup: the first entry with this lemma and POS whose features
  // include every feature in `wanted`. Used to pick agreeing adjective forms.
  const LexEntry *find_form(std::string_view lemma, Pos pos,
                            const Features &wanted) const;

  const std::vector<std::string> &sources() const { return sources_; }

  // All entries, surfaces in byte order, each surface's entries in file order.
  std::vector<LexEntry> entries() const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool operator==(const Lexicon &other) const {
    return by_surface_ == other.by_surface_ && sources_ == other.sources_;
  }

 private:
  std::map<std::string, std::vector<LexEntry>, std::less<>> by_surface_;
  std::vector<std::string> sources_;
  std::size_t size_ = 0;
};

struct LoadDiagnostic {
  std::size_t line = 0;
  std::string message;

  bool operator==(const LoadDiagnostic &) const = default;
};

struct LexiconLoad {
  Lexicon lexicon;
  std::vector<LoadDiagnostic> errors;
};

// Reads a TSV dictionary: surface, lemma, pos[, features]. Lines starting
// with '#' and blank lines are skipped. Malformed rows are reported in
// `errors` with their 1-based line numbers. Throws okb::Error("empty
// dictionary") when the input holds no records at all.
LexiconLoad load_lexicon(std::istream &rows, std::string source_name);
LexiconLoad load_lexicon_text(std::string_view rows, std::string source_name);

}  // namespace okb

#endif  // OKB_LEXICON_H_
