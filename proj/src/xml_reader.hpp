#pragma once

// Non-validating XML reader producing a small element tree. Handles the XML
// declaration, comments, processing instructions, CDATA, the predefined
// entities and character references. DOCTYPE declarations are rejected.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oreweave::xml {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Attribute {
  std::string name;  // qualified name as written
  std::string value;
  Position position;
};

struct Element {
  std::string name;  // qualified name as written
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  // Character data directly inside this element, concatenated.
  std::string text;
  // True if any non-whitespace text appears between child elements.
  bool mixed = false;
  Position position;

  const Attribute* find_attribute(std::string_view qname) const;
};

// Throws ParseError with line and column on malformed input.
Element parse_document(std::string_view bytes);

}  // namespace oreweave::xml
