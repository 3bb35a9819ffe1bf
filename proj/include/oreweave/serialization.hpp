#pragma once

// Reading and writing Resource Maps.
//
// Canonical form (.remc): one statement per line, sorted bytewise, each line
//
//   <subject> <predicate> (<object> | "literal"[@lang][^^<datatype>]) .\n
//
// with \" \\ \n as the only escapes inside literals. The creation time is
// carried as a dcterms:created line on the Resource Map.
//
// RDF/XML (.rdf): a fixed subset. One rdf:Description per subject, properties
// as child elements with rdf:resource or text content (plus rdf:datatype or
// xml:lang), namespaces declared on rdf:RDF.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oreweave/model.hpp"

namespace oreweave {

enum class Format { Canonical, RdfXml };

inline constexpr std::string_view kCanonicalMediaType = "application/x-ore-canonical";
inline constexpr std::string_view kRdfXmlMediaType = "application/rdf+xml";
inline constexpr std::string_view kHtmlMediaType = "text/html";

std::string_view extension(Format f);  // ".remc" / ".rdf"
std::string_view media_type(Format f);
// Picks a format from a file name or URL path by extension.
std::optional<Format> format_from_extension(std::string_view path);
// Looks at the leading bytes: XML declarations and rdf:RDF roots are RDF/XML.
Format sniff_format(std::string_view bytes);

std::string serialize_canonical(const ResourceMap& rem);
// Throws EncodingError (byte offset), ParseError (line number) or
// StructuralError (valid syntax, but not one Resource Map).
ResourceMap parse_canonical(std::string_view bytes);
// Only the line grammar; no Resource Map structure is required.
Graph parse_canonical_graph(std::string_view bytes);
std::string serialize_canonical_graph(const Graph& graph);

// Throws ValidationError if a predicate cannot be written as an XML QName or
// a literal holds characters XML 1.0 cannot carry.
std::string serialize_rdfxml(const ResourceMap& rem);
// Throws EncodingError, ParseError (line and column) or StructuralError.
ResourceMap parse_rdfxml(std::string_view bytes);

std::string serialize(const ResourceMap& rem, Format f);
ResourceMap parse(std::string_view bytes, Format f);

// Static HTML page for people. Lists every aggregated resource as a link
// (class="resource"); resources that have their own map in `maps` expand into
// nested lists. Relationship triples are listed verbatim, and a version section
// follows hasVersion chains. Only aggregated resources are hyperlinked.
std::string render_splash(const Aggregation& agg, std::span<const ResourceMap> maps);

}  // namespace oreweave
