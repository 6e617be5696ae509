#include "negeval/xml.hpp"

#include <cctype>
#include <cstdint>

#include "negeval/error.hpp"

namespace negeval::xml {

std::optional<std::string> Element::attribute(const std::string& key) const {
  auto it = attributes.find(key);
  if (it == attributes.end()) return std::nullopt;
  return it->second;
}

std::string Element::text() const {
  std::string out;
  for (const auto& child : children) {
    if (const auto* t = std::get_if<Text>(&child))
      out += t->value;
    else
      out += std::get<std::unique_ptr<Element>>(child)->text();
  }
  return out;
}

std::vector<const Element*> Element::children_named(std::string_view child_name) const {
  std::vector<const Element*> out;
  for (const auto& child : children)
    if (const auto* e = std::get_if<std::unique_ptr<Element>>(&child))
      if ((*e)->name == child_name) out.push_back(e->get());
  return out;
}

namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool is_name_char(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || c == '_' || c == '-' || c == '.' || c == ':' || u >= 0x80;
}

class Reader {
 public:
  Reader(std::string_view doc, const std::string& source) : doc_(doc), source_(source) {}

  std::unique_ptr<Element> document() {
    skip_misc();
    if (at_end() || peek() != '<') fail("expected root element");
    auto root = element();
    skip_misc();
    if (!at_end()) fail("content after the root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

  bool at_end() const { return pos_ >= doc_.size(); }
  char peek() const { return doc_[pos_]; }
  bool starts_with(std::string_view s) const { return doc_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < doc_.size(); ++i, ++pos_)
      if (doc_[pos_] == '\n') ++line_;
  }

  void skip_until(std::string_view terminator, const char* what) {
    auto end = doc_.find(terminator, pos_);
    if (end == std::string_view::npos) fail(std::string("unterminated ") + what);
    advance(end + terminator.size() - pos_);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  // Whitespace, comments, processing instructions and DOCTYPE outside the root.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<!DOCTYPE")) {
        skip_until(">", "DOCTYPE");
      } else {
        return;
      }
    }
  }

  std::string name() {
    auto start = pos_;
    while (!at_end() && is_name_char(peek())) advance();
    if (start == pos_) fail("expected a name");
    return std::string(doc_.substr(start, pos_ - start));
  }

  void reference(std::string& out) {
    // at '&'
    auto end = doc_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 12) fail("malformed entity reference");
    auto ref = doc_.substr(pos_ + 1, end - pos_ - 1);
    if (ref == "lt") {
      out += '<';
    } else if (ref == "gt") {
      out += '>';
    } else if (ref == "amp") {
      out += '&';
    } else if (ref == "quot") {
      out += '"';
    } else if (ref == "apos") {
      out += '\'';
    } else if (ref.size() > 1 && ref[0] == '#') {
      std::uint32_t cp = 0;
      bool hex = ref[1] == 'x' || ref[1] == 'X';
      auto digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) fail("malformed character reference");
      for (char c : digits) {
        int v;
        if (c >= '0' && c <= '9')
          v = c - '0';
        else if (hex && c >= 'a' && c <= 'f')
          v = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F')
          v = c - 'A' + 10;
        else
          fail("malformed character reference");
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) fail("character reference out of range");
      }
      append_utf8(out, cp);
    } else {
      fail("unknown entity '&" + std::string(ref) + ";'");
    }
    advance(end + 1 - pos_);
  }

  std::string attribute_value() {
    if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
    char quote = peek();
    advance();
    std::string out;
    while (!at_end() && peek() != quote) {
      if (peek() == '<') fail("'<' in attribute value");
      if (peek() == '&')
        reference(out);
      else {
        out += peek();
        advance();
      }
    }
    if (at_end()) fail("unterminated attribute value");
    advance();
    return out;
  }

  std::unique_ptr<Element> element() {
    auto e = std::make_unique<Element>();
    e->line = line_;
    advance();  // '<'
    e->name = name();
    for (;;) {
      skip_space();
      if (at_end()) fail("unterminated start tag <" + e->name + ">");
      if (starts_with("/>")) {
        advance(2);
        return e;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      auto key = name();
      skip_space();
      if (at_end() || peek() != '=') fail("expected '=' after attribute " + key);
      advance();
      skip_space();
      auto value = attribute_value();
      if (!e->attributes.emplace(key, std::move(value)).second)
        fail("duplicate attribute " + key + " on <" + e->name + ">");
    }
    content(*e);
    return e;
  }

  void push_text(Element& parent, std::string&& text) {
    if (text.empty()) return;
    if (!parent.children.empty())
      if (auto* t = std::get_if<Text>(&parent.children.back())) {
        t->value += text;
        return;
      }
    parent.children.emplace_back(Text{std::move(text)});
  }

  void content(Element& parent) {
    std::string text;
    for (;;) {
      if (at_end()) fail("missing end tag </" + parent.name + ">");
      if (starts_with("</")) {
        push_text(parent, std::move(text));
        advance(2);
        auto closing = name();
        if (closing != parent.name)
          fail("end tag </" + closing + "> does not match <" + parent.name + ">");
        skip_space();
        if (at_end() || peek() != '>') fail("malformed end tag </" + closing + ">");
        advance();
        return;
      }
      if (starts_with("<!--")) {
        skip_until("-->", "comment");
      } else if (starts_with("<![CDATA[")) {
        advance(9);
        auto end = doc_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        text += doc_.substr(pos_, end - pos_);
        advance(end + 3 - pos_);
      } else if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (peek() == '<') {
        push_text(parent, std::move(text));
        text.clear();
        parent.children.emplace_back(element());
      } else if (peek() == '&') {
        reference(text);
      } else {
        text += peek();
        advance();
      }
    }
  }

  std::string_view doc_;
  const std::string& source_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

std::unique_ptr<Element> parse(std::string_view document, const std::string& source) {
  return Reader(document, source).document();
}

}  // namespace negeval::xml
