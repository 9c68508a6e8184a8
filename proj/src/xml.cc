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

#include "okb/xml.h"

#include <map>
#include <optional>
#include <utility>

#include "okb/error.h"
#include "okb/text.h"

namespace okb::xml {

namespace {

bool is_xml_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_char(char c) {
  return !is_xml_space(c) && c != '<' && c != '>' && c != '/' && c != '=' && c != '"' &&
         c != '\'' && c != '&' && c != ';' && c != '[' && c != ']' && c != '\0';
}

using Scope = std::map<std::string, std::string, std::less<>>;

class Reader {
 public:
  explicit Reader(std::string_view doc) : doc_(doc) {}

  Element parse_document() {
    if (doc_.starts_with("\xEF\xBB\xBF")) advance(3);
    if (!text::is_valid_utf8(doc_)) fail("document is not valid UTF-8");
    parse_misc(true);
    if (at_end() || peek() != '<') fail("expected root element");
    Scope scope = {{"xml", std::string(kXmlNamespace)}};
    Element root = parse_element(scope);
    parse_misc(false);
    if (!at_end()) fail("content after the root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string &message) const {
    throw Error(ErrorCode::kInvalid, "line " + std::to_string(line_) + ", column " +
                                         std::to_string(column()) + ": " + message);
  }

  bool at_end() const { return pos_ >= doc_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < doc_.size() ? doc_[pos_ + ahead] : '\0';
  }
  bool looking_at(std::string_view s) const { return doc_.substr(pos_).starts_with(s); }
  std::size_t column() const { return pos_ - line_start_ + 1; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < doc_.size(); ++i) {
      if (doc_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }

  void expect(std::string_view s) {
    if (!looking_at(s)) fail("expected '" + std::string(s) + "'");
    advance(s.size());
  }

  void skip_space() {
    while (!at_end() && is_xml_space(peek())) advance();
  }

  // Advances past `terminator`, returning the text before it.
  std::string_view read_until(std::string_view terminator, std::string_view what) {
    const std::size_t end = doc_.find(terminator, pos_);
    if (end == std::string_view::npos) fail("unterminated " + std::string(what));
    const std::string_view body = doc_.substr(pos_, end - pos_);
    advance(end - pos_ + terminator.size());
    return body;
  }

  std::string read_name() {
    const std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) advance();
    if (pos_ == start) fail("expected a name");
    return std::string(doc_.substr(start, pos_ - start));
  }

  // Prolog (before_root) or trailing misc: whitespace, comments, PIs, DOCTYPE.
  void parse_misc(bool before_root) {
    while (true) {
      skip_space();
      if (looking_at("<?")) {
        advance(2);
        read_until("?>", "processing instruction");
      } else if (looking_at("<!--")) {
        advance(4);
        read_until("-->", "comment");
      } else if (before_root && looking_at("<!DOCTYPE")) {
        parse_doctype();
      } else {
        return;
      }
    }
  }

  void parse_doctype() {
    expect("<!DOCTYPE");
    while (!at_end() && peek() != '[' && peek() != '>') advance();
    if (peek() == '[') {
      advance();
      while (true) {
        skip_space();
        if (at_end()) fail("unterminated DOCTYPE");
        if (peek() == ']') {
          advance();
          break;
        }
        if (looking_at("<!ENTITY")) {
          advance(8);
          skip_space();
          if (peek() == '%') fail("parameter entities are not supported");
          const std::string name = read_name();
          skip_space();
          const char quote = peek();
          if (quote != '"' && quote != '\'') fail("expected quoted entity value");
          advance();
          const std::string_view value = read_until(std::string_view(&quote, 1), "entity value");
          entities_[name] = decode(value, false);
          skip_space();
          expect(">");
        } else if (looking_at("<!--")) {
          advance(4);
          read_until("-->", "comment");
        } else if (looking_at("<!") || looking_at("<?")) {
          read_until(">", "markup declaration");
        } else {
          fail("unexpected content in DOCTYPE");
        }
      }
      skip_space();
    }
    expect(">");
  }

  // Expands character and entity references in `raw`.
  std::string decode(std::string_view raw, bool normalize_space) {
    std::string out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char c = raw[i];
      if (c != '&') {
        out.push_back(normalize_space && (c == '\t' || c == '\n' || c == '\r') ? ' ' : c);
        continue;
      }
      const std::size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity reference");
      const std::string_view name = raw.substr(i + 1, semi - i - 1);
      if (name.starts_with('#')) {
        const bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
        const std::string digits(name.substr(hex ? 2 : 1));
        if (digits.empty()) fail("empty character reference");
        std::size_t used = 0;
        unsigned long value = 0;
        try {
          value = std::stoul(digits, &used, hex ? 16 : 10);
        } catch (const std::exception &) {
          fail("bad character reference &" + std::string(name) + ";");
        }
        if (used != digits.size() || value == 0 || value > 0x10FFFF) {
          fail("bad character reference &" + std::string(name) + ";");
        }
        text::append_utf8(out, static_cast<char32_t>(value));
      } else if (name == "amp") {
        out.push_back('&');
      } else if (name == "lt") {
        out.push_back('<');
      } else if (name == "gt") {
        out.push_back('>');
      } else if (name == "quot") {
        out.push_back('"');
      } else if (name == "apos") {
        out.push_back('\'');
      } else if (auto it = entities_.find(name); it != entities_.end()) {
        out += it->second;
      } else {
        fail("undefined entity &" + std::string(name) + ";");
      }
      i = semi;
    }
    return out;
  }

  std::pair<std::string, std::string> resolve(const Scope &scope, const std::string &qname,
                                              bool is_attribute) {
    const std::size_t colon = qname.find(':');
    if (colon == std::string::npos) {
      if (is_attribute) return {"", qname};
      auto it = scope.find("");
      return {it == scope.end() ? "" : it->second, qname};
    }
    const std::string prefix = qname.substr(0, colon);
    auto it = scope.find(prefix);
    if (it == scope.end()) fail("unbound namespace prefix '" + prefix + "'");
    return {it->second, qname.substr(colon + 1)};
  }

  Element parse_element(const Scope &parent_scope) {
    Element element;
    element.line = line_;
    element.column = column();
    expect("<");
    element.qname = read_name();

    std::vector<std::pair<std::string, std::string>> raw_attributes;
    while (true) {
      const bool had_space = !at_end() && is_xml_space(peek());
      skip_space();
      if (at_end()) fail("unterminated start tag <" + element.qname + ">");
      if (peek() == '>' || looking_at("/>")) break;
      if (!had_space) fail("expected whitespace between attributes");
      std::string name = read_name();
      skip_space();
      expect("=");
      skip_space();
      const char quote = peek();
      if (quote != '"' && quote != '\'') fail("expected quoted value for " + name);
      advance();
      const std::string_view raw = read_until(std::string_view(&quote, 1), "attribute value");
      if (raw.find('<') != std::string_view::npos) fail("'<' in attribute value");
      for (const auto &[existing, value] : raw_attributes) {
        if (existing == name) fail("duplicate attribute " + name);
      }
      raw_attributes.emplace_back(std::move(name), decode(raw, true));
    }

    Scope scope = parent_scope;
    for (const auto &[name, value] : raw_attributes) {
      if (name == "xmlns") scope[""] = value;
      if (name.starts_with("xmlns:")) scope[name.substr(6)] = value;
    }
    std::tie(element.ns, element.local) = resolve(scope, element.qname, false);
    for (auto &[name, value] : raw_attributes) {
      if (name == "xmlns" || name.starts_with("xmlns:")) continue;
      Attribute attr;
      attr.qname = name;
      std::tie(attr.ns, attr.local) = resolve(scope, name, true);
      attr.value = std::move(value);
      element.attributes.push_back(std::move(attr));
    }

    if (looking_at("/>")) {
      advance(2);
      return element;
    }
    expect(">");

    while (true) {
      if (at_end()) fail("unclosed element <" + element.qname + ">");
      if (looking_at("</")) {
        advance(2);
        const std::string closing = read_name();
        if (closing != element.qname) {
          fail("mismatched end tag </" + closing + ">, expected </" + element.qname + ">");
        }
        skip_space();
        expect(">");
        return element;
      }
      if (looking_at("<!--")) {
        advance(4);
        read_until("-->", "comment");
      } else if (looking_at("<![CDATA[")) {
        advance(9);
        element.text += read_until("]]>", "CDATA section");
      } else if (looking_at("<?")) {
        advance(2);
        read_until("?>", "processing instruction");
      } else if (peek() == '<') {
        element.children.push_back(parse_element(scope));
      } else {
        const std::size_t start = pos_;
        while (!at_end() && peek() != '<') advance();
        element.text += decode(doc_.substr(start, pos_ - start), false);
      }
    }
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  std::map<std::string, std::string, std::less<>> entities_;
};

}  // namespace

const Attribute *Element::attribute(std::string_view ns, std::string_view local) const {
  for (const Attribute &a : attributes) {
    if (a.ns == ns && a.local == local) return &a;
  }
  return nullptr;
}

const Attribute *Element::attribute(std::string_view qname) const {
  for (const Attribute &a : attributes) {
    if (a.qname == qname) return &a;
  }
  return nullptr;
}

Element parse(std::string_view document) { return Reader(document).parse_document(); }

std::string escape_text(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '\r': out += "&#13;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string escape_attribute(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\t': out += "&#9;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace okb::xml
