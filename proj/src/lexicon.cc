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

#include "okb/lexicon.h"

#include <array>
#include <istream>
#include <sstream>
#include <utility>

#include "okb/error.h"
#include "okb/text.h"

namespace okb {

namespace {

constexpr std::array<std::pair<Pos, std::string_view>, 10> kPosNames = {{
    {Pos::kNoun, "NOUN"},
    {Pos::kAdj, "ADJ"},
    {Pos::kVerb, "VERB"},
    {Pos::kConj, "CONJ"},
    {Pos::kPrep, "PREP"},
    {Pos::kPron, "PRON"},
    {Pos::kNum, "NUM"},
    {Pos::kPart, "PART"},
    {Pos::kAdv, "ADV"},
    {Pos::kAbbr, "ABBR"},
}};

constexpr std::array<std::string_view, 7> kCaseNames = {"nom", "gen", "dat", "acc",
                                                        "ins", "loc", "voc"};
constexpr std::array<std::string_view, 2> kNumberNames = {"sg", "pl"};
constexpr std::array<std::string_view, 3> kGenderNames = {"m", "f", "n"};

template <typename Enum, std::size_t N>
std::optional<Enum> parse_enum(const std::array<std::string_view, N> &names,
                               std::string_view s) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<Enum>(i);
  }
  return std::nullopt;
}

bool contains_space(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (text::is_space(text::decode_next(s, pos))) return true;
  }
  return false;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, end - start));
    start = end + 1;
  }
}

const std::vector<LexEntry> kNoEntries;

}  // namespace

std::string_view to_string(Pos pos) {
  for (const auto &[p, name] : kPosNames) {
    if (p == pos) return name;
  }
  return "?";
}

std::string_view to_string(Case c) { return kCaseNames[static_cast<std::size_t>(c)]; }
std::string_view to_string(Number n) { return kNumberNames[static_cast<std::size_t>(n)]; }
std::string_view to_string(Gender g) { return kGenderNames[static_cast<std::size_t>(g)]; }

std::optional<Pos> parse_pos(std::string_view s) {
  for (const auto &[p, name] : kPosNames) {
    if (name == s) return p;
  }
  return std::nullopt;
}

bool Features::agrees_with(const Features &other) const {
  if (grammatical_case && other.grammatical_case &&
      *grammatical_case != *other.grammatical_case) {
    return false;
  }
  if (number && other.number && *number != *other.number) return false;
  if (gender && other.gender && *gender != *other.gender) return false;
  return true;
}

std::string Features::to_string() const {
  std::string out;
  auto put = [&out](std::string_view key, std::string_view value) {
    if (!out.empty()) out += ',';
    out += key;
    out += '=';
    out += value;
  };
  if (grammatical_case) put("case", okb::to_string(*grammatical_case));
  if (number) put("number", okb::to_string(*number));
  if (gender) put("gender", okb::to_string(*gender));
  return out;
}

Features Features::parse(std::string_view s) {
  Features features;
  if (s.empty()) return features;
  for (std::string_view item : split(s, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalid, "feature without '=': " + std::string(item));
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    auto bad_value = [&] {
      return Error(ErrorCode::kInvalid, "bad value for feature " + std::string(key) +
                                            ": " + std::string(value));
    };
    auto repeated = [&] {
      return Error(ErrorCode::kInvalid, "repeated feature " + std::string(key));
    };
    if (key == "case") {
      if (features.grammatical_case) throw repeated();
      features.grammatical_case = parse_enum<Case>(kCaseNames, value);
      if (!features.grammatical_case) throw bad_value();
    } else if (key == "number") {
      if (features.number) throw repeated();
      features.number = parse_enum<Number>(kNumberNames, value);
      if (!features.number) throw bad_value();
    } else if (key == "gender") {
      if (features.gender) throw repeated();
      features.gender = parse_enum<Gender>(kGenderNames, value);
      if (!features.gender) throw bad_value();
    } else {
      throw Error(ErrorCode::kInvalid, "unknown feature " + std::string(key));
    }
  }
  return features;
}

void Lexicon::add(LexEntry entry) {
  entry.surface = text::fold_case(entry.surface);
  auto &bucket = by_surface_[entry.surface];
  for (const LexEntry &existing : bucket) {
    if (existing == entry) return;
  }
  bucket.push_back(std::move(entry));
  ++size_;
}

void Lexicon::merge(const Lexicon &other) {
  for (const LexEntry &entry : other.entries()) add(entry);
  for (const std::string &source : other.sources_) sources_.push_back(source);
}

const std::vector<LexEntry> &Lexicon::lookup(std::string_view surface) const {
  auto it = by_surface_.find(text::fold_case(surface));
  return it == by_surface_.end() ? kNoEntries : it->second;
}

Lemmatized Lexicon::lemmatize(std::string_view surface) const {
  const auto &found = lookup(surface);
  if (!found.empty()) return {found.front().lemma, found.front().pos};
  if (text::has_abbreviation_shape(surface)) return {std::string(surface), Pos::kAbbr};
  return {text::fold_case(surface), Pos::kNoun};
}

const LexEntry *Lexicon::find_form(std::string_view lemma, Pos pos,
                                   const Features &wanted) const {
  for (const auto &[surface, bucket] : by_surface_) {
    for (const LexEntry &entry : bucket) {
      if (entry.lemma != lemma || entry.pos != pos) continue;
      const Features &f = entry.features;
      if (wanted.grammatical_case && f.grammatical_case != wanted.grammatical_case) continue;
      if (wanted.number && f.number != wanted.number) continue;
      if (wanted.gender && f.gender != wanted.gender) continue;
      return &entry;
    }
  }
  return nullptr;
}

std::vector<LexEntry> Lexicon::entries() const {
  std::vector<LexEntry> all;
  all.reserve(size_);
  for (const auto &[surface, bucket] : by_surface_) {
    all.insert(all.end(), bucket.begin(), bucket.end());
  }
  return all;
}

LexiconLoad load_lexicon(std::istream &rows, std::string source_name) {
  LexiconLoad result;
  std::string line;
  std::size_t line_no = 0;
  std::size_t records = 0;
  while (std::getline(rows, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.empty() || line.front() == '#') continue;
    ++records;

    auto report = [&](std::string message) {
      result.errors.push_back({line_no, std::move(message)});
    };
    if (!text::is_valid_utf8(line)) {
      report("invalid UTF-8");
      continue;
    }
    const auto fields = split(line, '\t');
    if (fields.size() < 3 || fields.size() > 4) {
      report("expected 3 or 4 tab-separated fields, got " + std::to_string(fields.size()));
      continue;
    }
    if (fields[0].empty() || fields[1].empty() || contains_space(fields[0]) ||
        contains_space(fields[1])) {
      report("surface and lemma must be non-empty and contain no whitespace");
      continue;
    }
    const auto pos = parse_pos(fields[2]);
    if (!pos) {
      report("unknown pos tag '" + std::string(fields[2]) + "'");
      continue;
    }
    LexEntry entry{std::string(fields[0]), std::string(fields[1]), *pos, {}};
    if (fields.size() == 4) {
      try {
        entry.features = Features::parse(fields[3]);
      } catch (const Error &e) {
        report(e.what());
        continue;
      }
    }
    result.lexicon.add(std::move(entry));
  }
  if (records == 0) throw Error(ErrorCode::kInvalid, "empty dictionary");
  result.lexicon.add_source(std::move(source_name));
  return result;
}

LexiconLoad load_lexicon_text(std::string_view rows, std::string source_name) {
  std::istringstream in{std::string(rows)};
  return load_lexicon(in, std::move(source_name));
}

}  // namespace okb
