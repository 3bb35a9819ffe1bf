#include <algorithm>
#include <map>
#include <set>

#include "oreweave/error.hpp"
#include "oreweave/serialization.hpp"
#include "oreweave/vocab.hpp"
#include "xml_reader.hpp"

namespace oreweave {

namespace {

constexpr std::string_view kXmlNamespace = "http://www.w3.org/XML/1998/namespace";

bool is_ncname_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_ncname_char(char c) {
  return is_ncname_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

// Splits a predicate URI into namespace and local name.
std::pair<std::string, std::string> split_qname(const Uri& predicate) {
  const std::string& s = predicate.str();
  std::size_t start = s.size();
  while (start > 0 && is_ncname_char(s[start - 1])) --start;
  while (start < s.size() && !is_ncname_start(s[start])) ++start;
  if (start == s.size() || start == 0)
    throw ValidationError("predicate " + s + " cannot be written as an XML element name");
  return {s.substr(0, start), s.substr(start)};
}

void check_xml_text(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 0x20 && c != '\t' && c != '\n' && c != '\r')
      throw ValidationError("literal contains a control character XML cannot represent");
    if (c == 0xEF && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xBF &&
        (static_cast<unsigned char>(text[i + 2]) & 0xFE) == 0xBE)
      throw ValidationError("literal contains U+FFFE or U+FFFF");
  }
}

std::string escape_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
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

std::string escape_attribute(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
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

// Namespace URI -> prefix. Well-known namespaces get their usual prefixes;
// the rest are numbered in namespace order.
std::map<std::string, std::string> assign_prefixes(const Graph& graph) {
  std::map<std::string, std::string> prefixes;
  prefixes[std::string(vocab::kRdfNamespace)] = "rdf";
  for (const Triple& t : graph) prefixes.emplace(split_qname(t.predicate).first, "");
  const std::pair<std::string, const char*> known[] = {
      {std::string(vocab::kOreNamespace), "ore"},
      {std::string(vocab::kDctermsNamespace), "dcterms"},
      {vocab::project_base(), "ow"},
  };
  std::set<std::string> used{"rdf"};
  for (const auto& [ns, prefix] : known) {
    auto it = prefixes.find(ns);
    if (it != prefixes.end() && it->second.empty() && !used.count(prefix)) {
      it->second = prefix;
      used.insert(prefix);
    }
  }
  int n = 0;
  for (auto& [ns, prefix] : prefixes) {
    if (!prefix.empty()) continue;
    do {
      prefix = "ns" + std::to_string(++n);
    } while (used.count(prefix));
    used.insert(prefix);
  }
  return prefixes;
}

}  // namespace

std::string serialize_rdfxml(const ResourceMap& rem) {
  const Graph graph = rem.document_graph();
  const auto prefixes = assign_prefixes(graph);

  std::vector<std::pair<std::string, std::string>> decls;  // prefix, namespace
  for (const auto& [ns, prefix] : prefixes) decls.emplace_back(prefix, ns);
  std::sort(decls.begin(), decls.end());

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<rdf:RDF";
  for (const auto& [prefix, ns] : decls)
    out += "\n    xmlns:" + prefix + "=\"" + escape_attribute(ns) + "\"";
  out += ">\n";

  const Uri* current = nullptr;
  for (const Triple& t : graph) {
    if (!current || *current != t.subject) {
      if (current) out += "  </rdf:Description>\n";
      out += "  <rdf:Description rdf:about=\"" + escape_attribute(t.subject.str()) + "\">\n";
      current = &t.subject;
    }
    const auto [ns, local] = split_qname(t.predicate);
    const std::string qname = prefixes.at(ns) + ":" + local;
    out += "    <" + qname;
    if (const Uri* obj = t.object.as_uri()) {
      out += " rdf:resource=\"" + escape_attribute(obj->str()) + "\"/>\n";
      continue;
    }
    const Literal& lit = t.object.literal();
    check_xml_text(lit.lexical());
    if (lit.datatype()) out += " rdf:datatype=\"" + escape_attribute(lit.datatype()->str()) + "\"";
    if (lit.language()) out += " xml:lang=\"" + escape_attribute(*lit.language()) + "\"";
    out += ">" + escape_text(lit.lexical()) + "</" + qname + ">\n";
  }
  if (current) out += "  </rdf:Description>\n";
  out += "</rdf:RDF>\n";
  return out;
}

namespace {

class RdfXmlReader {
 public:
  Graph read(const xml::Element& root) {
    Scope scope = push(root, {});
    if (expand(root.name, root.position, scope) != rdf("RDF"))
      fail(root.position, "root element must be rdf:RDF");
    for (const auto& a : root.attributes)
      if (!is_xmlns(a.name)) fail(a.position, "unexpected attribute '" + a.name + "' on rdf:RDF");
    if (has_text(root.text)) fail(root.position, "text content directly inside rdf:RDF");
    for (const xml::Element& desc : root.children) description(desc, scope);
    return std::move(graph_);
  }

 private:
  using Scope = std::map<std::string, std::string>;

  [[noreturn]] static void fail(const xml::Position& at, const std::string& what) {
    throw ParseError("RDF/XML: " + what, at.line, at.column);
  }

  static bool is_xmlns(std::string_view name) {
    return name == "xmlns" || name.starts_with("xmlns:");
  }
  static bool has_text(std::string_view text) {
    return text.find_first_not_of(" \t\r\n") != std::string_view::npos;
  }
  static std::string rdf(std::string_view local) {
    return std::string(vocab::kRdfNamespace) + std::string(local);
  }

  static Scope push(const xml::Element& el, Scope scope) {
    for (const auto& a : el.attributes) {
      if (a.name == "xmlns") scope[""] = a.value;
      else if (a.name.starts_with("xmlns:")) scope[a.name.substr(6)] = a.value;
    }
    return scope;
  }

  static std::string expand(const std::string& qname, const xml::Position& at, const Scope& scope) {
    const std::size_t colon = qname.find(':');
    const std::string prefix = colon == std::string::npos ? "" : qname.substr(0, colon);
    const std::string local = colon == std::string::npos ? qname : qname.substr(colon + 1);
    if (prefix == "xml") return std::string(kXmlNamespace) + local;
    auto it = scope.find(prefix);
    if (it == scope.end()) {
      if (prefix.empty()) fail(at, "element '" + qname + "' has no namespace");
      fail(at, "undeclared namespace prefix '" + prefix + "'");
    }
    return it->second + local;
  }

  static Uri to_uri(const std::string& text, const xml::Position& at) {
    auto u = Uri::parse(text);
    if (!u) fail(at, "not an absolute URI: '" + text + "'");
    return *u;
  }

  void description(const xml::Element& el, const Scope& outer) {
    const Scope scope = push(el, outer);
    if (expand(el.name, el.position, scope) != rdf("Description"))
      fail(el.position, "unknown element '" + el.name + "'; expected rdf:Description");
    std::optional<Uri> subject;
    for (const auto& a : el.attributes) {
      if (is_xmlns(a.name)) continue;
      if (expand(a.name, a.position, scope) == rdf("about")) subject = to_uri(a.value, a.position);
      else fail(a.position, "unexpected attribute '" + a.name + "' on rdf:Description");
    }
    if (!subject) fail(el.position, "rdf:Description without rdf:about");
    if (has_text(el.text)) fail(el.position, "text content directly inside rdf:Description");
    for (const xml::Element& prop : el.children) property(*subject, prop, scope);
  }

  void property(const Uri& subject, const xml::Element& el, const Scope& outer) {
    const Scope scope = push(el, outer);
    const Uri predicate = to_uri(expand(el.name, el.position, scope), el.position);
    if (!el.children.empty()) fail(el.children.front().position, "nested elements inside a property");
    std::optional<Uri> resource, datatype;
    std::optional<std::string> language;
    for (const auto& a : el.attributes) {
      if (is_xmlns(a.name)) continue;
      const std::string name = expand(a.name, a.position, scope);
      if (name == rdf("resource")) resource = to_uri(a.value, a.position);
      else if (name == rdf("datatype")) datatype = to_uri(a.value, a.position);
      else if (name == std::string(kXmlNamespace) + "lang") language = a.value;
      else fail(a.position, "unexpected attribute '" + a.name + "' on property element");
    }
    if (resource) {
      if (datatype || language || !el.text.empty())
        fail(el.position, "rdf:resource property cannot also carry a literal");
      graph_.add(Triple{subject, predicate, *resource});
      return;
    }
    if (language && datatype) fail(el.position, "literal has both xml:lang and rdf:datatype");
    if (language && !Literal::is_valid_language(*language))
      fail(el.position, "invalid language tag '" + *language + "'");
    graph_.add(Triple{subject, predicate, Literal(el.text, datatype, language)});
  }

  Graph graph_;
};

}  // namespace

ResourceMap parse_rdfxml(std::string_view bytes) {
  require_utf8(bytes);
  const xml::Element root = xml::parse_document(bytes);
  return ResourceMap::from_document_graph(RdfXmlReader().read(root));
}

}  // namespace oreweave
