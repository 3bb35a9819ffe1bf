#include "xml_reader.hpp"

#include "oreweave/error.hpp"

namespace oreweave::xml {

const Attribute* Element::find_attribute(std::string_view qname) const {
  for (const Attribute& a : attributes)
    if (a.name == qname) return &a;
  return nullptr;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool is_name_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' || u >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_xml_char(unsigned long cp) {
  return cp == 0x9 || cp == 0xA || cp == 0xD || (cp >= 0x20 && cp <= 0xD7FF) ||
         (cp >= 0xE000 && cp <= 0xFFFD) || (cp >= 0x10000 && cp <= 0x10FFFF);
}

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  Element document() {
    if (s_.substr(0, 3) == "\xEF\xBB\xBF") advance(3);
    misc();
    if (eof() || peek() != '<') fail("expected root element");
    Element root = element();
    misc();
    if (!eof()) fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("XML: " + what, pos_.line, pos_.column);
  }

  bool eof() const { return i_ >= s_.size(); }
  char peek(std::size_t k = 0) const { return i_ + k < s_.size() ? s_[i_ + k] : '\0'; }
  bool looking_at(std::string_view t) const { return s_.substr(i_, t.size()) == t; }

  void advance(std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i_ < s_.size(); ++k) {
      // Columns count bytes; good enough to locate an error.
      if (s_[i_] == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else {
        ++pos_.column;
      }
      ++i_;
    }
  }

  void skip_space() {
    while (!eof() && is_space(peek())) advance();
  }

  void skip_until(std::string_view terminator, const char* what) {
    while (!eof() && !looking_at(terminator)) advance();
    if (eof()) fail(std::string("unterminated ") + what);
    advance(terminator.size());
  }

  // Whitespace, comments and processing instructions outside the root.
  void misc() {
    while (true) {
      skip_space();
      if (looking_at("<?")) {
        skip_until("?>", "processing instruction");
      } else if (looking_at("<!--")) {
        skip_until("-->", "comment");
      } else if (looking_at("<!DOCTYPE")) {
        fail("DOCTYPE declarations are not supported");
      } else {
        return;
      }
    }
  }

  std::string name() {
    if (!is_name_start(peek())) fail("expected a name");
    const std::size_t start = i_;
    while (!eof() && is_name_char(peek())) advance();
    return std::string(s_.substr(start, i_ - start));
  }

  void reference(std::string& out) {
    advance();  // '&'
    const std::size_t semi = s_.find(';', i_);
    if (semi == std::string_view::npos || semi - i_ > 10) fail("malformed entity reference");
    const std::string_view ent = s_.substr(i_, semi - i_);
    if (ent == "lt") out += '<';
    else if (ent == "gt") out += '>';
    else if (ent == "amp") out += '&';
    else if (ent == "quot") out += '"';
    else if (ent == "apos") out += '\'';
    else if (ent.size() > 1 && ent[0] == '#') {
      unsigned long cp = 0;
      const bool hex = ent[1] == 'x';
      const std::string_view digits = ent.substr(hex ? 2 : 1);
      if (digits.empty()) fail("empty character reference");
      for (const char c : digits) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (hex && c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else fail("bad character reference");
        cp = cp * (hex ? 16 : 10) + static_cast<unsigned long>(d);
        if (cp > 0x10FFFF) fail("character reference out of range");
      }
      if (!is_xml_char(cp)) fail("character reference to a non-XML character");
      append_utf8(out, cp);
    } else {
      fail("unknown entity '" + std::string(ent) + "'");
    }
    advance(ent.size() + 1);
  }

  std::string attribute_value() {
    const char quote = peek();
    if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
    advance();
    std::string out;
    while (true) {
      if (eof()) fail("unterminated attribute value");
      const char c = peek();
      if (c == quote) break;
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        reference(out);
        continue;
      }
      // Attribute-value normalization: literal whitespace becomes a space.
      out += is_space(c) ? ' ' : c;
      advance();
    }
    advance();
    return out;
  }

  Element element() {
    Element el;
    el.position = pos_;
    advance();  // '<'
    el.name = name();
    while (true) {
      const bool had_space = !eof() && is_space(peek());
      skip_space();
      if (looking_at("/>")) {
        advance(2);
        return el;
      }
      if (peek() == '>') {
        advance();
        break;
      }
      if (!had_space) fail("expected whitespace between attributes");
      Attribute attr;
      attr.position = pos_;
      attr.name = name();
      skip_space();
      if (peek() != '=') fail("expected '=' after attribute name");
      advance();
      skip_space();
      attr.value = attribute_value();
      if (el.find_attribute(attr.name)) fail("duplicate attribute '" + attr.name + "'");
      el.attributes.push_back(std::move(attr));
    }
    content(el);
    return el;
  }

  void content(Element& el) {
    std::string pending;  // text since the last child element
    auto flush = [&] {
      for (const char c : pending)
        if (!is_space(c)) {
          if (!el.children.empty()) el.mixed = true;
          break;
        }
      el.text += pending;
      pending.clear();
    };
    while (true) {
      if (eof()) fail("unclosed element '" + el.name + "'");
      if (looking_at("</")) {
        advance(2);
        const std::string closing = name();
        if (closing != el.name) fail("mismatched end tag '" + closing + "' for '" + el.name + "'");
        skip_space();
        if (peek() != '>') fail("expected '>'");
        advance();
        flush();
        if (!el.children.empty() && !el.text.empty()) {
          for (const char c : el.text)
            if (!is_space(c)) {
              el.mixed = true;
              break;
            }
        }
        return;
      }
      if (looking_at("<!--")) {
        skip_until("-->", "comment");
      } else if (looking_at("<![CDATA[")) {
        advance(9);
        const std::size_t end = s_.find("]]>", i_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        pending += s_.substr(i_, end - i_);
        advance(end - i_ + 3);
      } else if (looking_at("<?")) {
        skip_until("?>", "processing instruction");
      } else if (peek() == '<') {
        flush();
        el.children.push_back(element());
      } else if (peek() == '&') {
        reference(pending);
      } else {
        if (peek() == '\r') {
          // Line-end normalization.
          pending += '\n';
          advance();
          if (peek() == '\n') advance();
          continue;
        }
        if (looking_at("]]>")) fail("']]>' in character data");
        pending += peek();
        advance();
      }
    }
  }

  std::string_view s_;
  std::size_t i_ = 0;
  Position pos_;
};

}  // namespace

Element parse_document(std::string_view bytes) { return Reader(bytes).document(); }

}  // namespace oreweave::xml
