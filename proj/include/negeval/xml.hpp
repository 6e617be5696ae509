#ifndef NEGEVAL_XML_HPP
#define NEGEVAL_XML_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Minimal XML DOM, sufficient for the corpus formats: elements, attributes,
// character data, entity/character references, comments, CDATA, PIs and a
// DOCTYPE without internal subset. Namespaces are not interpreted.
namespace negeval::xml {

struct Element;

struct Text {
  std::string value;  // entity-decoded
};

using Node = std::variant<Text, std::unique_ptr<Element>>;

struct Element {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<Node> children;
  std::size_t line = 0;

  std::optional<std::string> attribute(const std::string& key) const;
  /// Concatenated character data of this element and all descendants.
  std::string text() const;
  /// Direct child elements named `child_name`.
  std::vector<const Element*> children_named(std::string_view child_name) const;
};

/// Parses a document and returns its root element. Throws ParseError
/// (with `source` and the line) on malformed input.
std::unique_ptr<Element> parse(std::string_view document, const std::string& source);

}  // namespace negeval::xml

#endif  // NEGEVAL_XML_HPP
