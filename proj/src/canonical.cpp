#include <algorithm>

#include "oreweave/error.hpp"
#include "oreweave/serialization.hpp"

namespace oreweave {

std::string_view extension(Format f) { return f == Format::Canonical ? ".remc" : ".rdf"; }

std::string_view media_type(Format f) {
  return f == Format::Canonical ? kCanonicalMediaType : kRdfXmlMediaType;
}

std::optional<Format> format_from_extension(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".remc")) return Format::Canonical;
  if (ends_with(".rdf") || ends_with(".xml")) return Format::RdfXml;
  return std::nullopt;
}

Format sniff_format(std::string_view bytes) {
  std::size_t i = 0;
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  while (i < bytes.size() && (bytes[i] == ' ' || bytes[i] == '\t' || bytes[i] == '\r' || bytes[i] == '\n'))
    ++i;
  const std::string_view rest = bytes.substr(i);
  if (rest.starts_with("<?xml") || rest.starts_with("<rdf:") || rest.starts_with("<!--"))
    return Format::RdfXml;
  return Format::Canonical;
}

std::string serialize_canonical_graph(const Graph& graph) {
  std::string out;
  for (const Triple& t : graph) {
    out += '<';
    out += t.subject.str();
    out += "> <";
    out += t.predicate.str();
    out += "> ";
    out += t.object.to_string();
    out += " .\n";
  }
  return out;
}

std::string serialize_canonical(const ResourceMap& rem) {
  return serialize_canonical_graph(rem.document_graph());
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

  Triple parse() {
    const Uri subject = uri();
    expect(' ');
    const Uri predicate = uri();
    expect(' ');
    Term object = peek() == '<' ? Term(uri()) : Term(literal());
    expect(' ');
    expect('.');
    if (pos_ != s_.size()) fail("trailing characters after '.'");
    return Triple{subject, predicate, std::move(object)};
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Uri uri() {
    if (peek() == '"') fail("literal not allowed here");
    expect('<');
    const std::size_t close = s_.find('>', pos_);
    if (close == std::string_view::npos) fail("unterminated URI");
    const std::string_view text = s_.substr(pos_, close - pos_);
    auto parsed = Uri::parse(text);
    if (!parsed) fail("invalid URI '" + std::string(text) + "'");
    pos_ = close + 1;
    return *parsed;
  }

  Literal literal() {
    expect('"');
    std::string lexical;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated literal");
      const char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lexical.push_back(c);
        continue;
      }
      if (pos_ >= s_.size()) fail("dangling escape");
      switch (s_[pos_++]) {
        case '"': lexical.push_back('"'); break;
        case '\\': lexical.push_back('\\'); break;
        case 'n': lexical.push_back('\n'); break;
        default: --pos_; fail("unknown escape sequence");
      }
    }
    std::optional<std::string> language;
    std::optional<Uri> datatype;
    if (peek() == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '^') ++pos_;
      language = std::string(s_.substr(start, pos_ - start));
      if (!Literal::is_valid_language(*language)) fail("invalid language tag '" + *language + "'");
    }
    if (peek() == '^') {
      ++pos_;
      expect('^');
      datatype = uri();
    }
    if (language && datatype) fail("literal has both a language tag and a datatype");
    return Literal(std::move(lexical), std::move(datatype), std::move(language));
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_canonical_graph(std::string_view bytes) {
  require_utf8(bytes);
  Graph graph;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < bytes.size()) {
    ++line_no;
    const std::size_t nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) throw ParseError("missing newline at end of line", line_no);
    const std::string_view line = bytes.substr(start, nl - start);
    if (line.empty()) throw ParseError("empty line", line_no);
    graph.add(LineParser(line, line_no).parse());
    start = nl + 1;
  }
  return graph;
}

ResourceMap parse_canonical(std::string_view bytes) {
  return ResourceMap::from_document_graph(parse_canonical_graph(bytes));
}

std::string serialize(const ResourceMap& rem, Format f) {
  return f == Format::Canonical ? serialize_canonical(rem) : serialize_rdfxml(rem);
}

ResourceMap parse(std::string_view bytes, Format f) {
  return f == Format::Canonical ? parse_canonical(bytes) : parse_rdfxml(bytes);
}

}  // namespace oreweave
