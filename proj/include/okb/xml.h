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

#ifndef OKB_XML_H_
#define OKB_XML_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Minimal namespace-aware XML reader and escaping helpers. Enough for the
// RDF/XML and KVP documents the converter handles: elements, attributes,
// character data, CDATA, comments, processing instructions, and a DOCTYPE
// whose internal subset may declare simple general entities.
namespace okb::xml {

inline constexpr std::string_view kXmlNamespace = "http://www.w3.org/XML/1998/namespace";

struct Attribute {
  std::string qname;
  std::string ns;  // empty for unprefixed attributes
  std::string local;
  std::string value;
};

struct Element {
  std::string qname;
  std::string ns;
  std::string local;
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  std::string text;  // character data directly inside this element
  std::size_t line = 0;
  std::size_t column = 0;

  const Attribute *attribute(std::string_view ns, std::string_view local) const;
  const Attribute *attribute(std::string_view qname) const;
  bool is(std::string_view ns, std::string_view local) const {
    return this->ns == ns && this->local == local;
  }
};

// Parses a complete document and returns its root element. Throws
// okb::Error(kInvalid, "line L, column C: ...") on malformed input.
Element parse(std::string_view document);

std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

}  // namespace okb::xml

#endif  // OKB_XML_H_
