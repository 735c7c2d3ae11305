#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mapforge::xml {

struct Attribute {
  std::string name;
  std::string value;
};

/// One parsed element. Character data of mixed content is concatenated
/// into `text`; entity references are decoded in both text and
/// attribute values.
struct Element {
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Element> children;
  std::string text;
  int line = 0;  // 0-based line of the start tag

  const std::string* attribute(std::string_view attr_name) const;
  const Element* first_child(std::string_view child_name) const;
};

/// Minimal non-validating XML reader: prolog, comments, DOCTYPE and
/// CDATA are handled; namespaces are kept as written. Throws
/// Error{MalformedDocument} with the offending line on any structural
/// problem (mismatched tags, bad entity, truncated input).
Element parse(std::string_view text);

/// Name of the first element, without a namespace prefix. Cheap probe
/// that does not build a tree; nullopt when the input is not XML.
std::optional<std::string> root_name(std::string_view text);

std::string escape_text(std::string_view raw);
std::string escape_attribute(std::string_view raw);

}  // namespace mapforge::xml
