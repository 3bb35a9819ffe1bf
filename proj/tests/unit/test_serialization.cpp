#include <gtest/gtest.h>

#include <regex>

#include "generators.hpp"
#include "oreweave/error.hpp"
#include "oreweave/fixtures.hpp"
#include "oreweave/serialization.hpp"
#include "oreweave/vocab.hpp"

using namespace oreweave;

namespace {

Uri x(const std::string& local) { return Uri("http://example.org/x/" + local); }
const Timestamp kAt = *parse_timestamp("2009-06-01T00:00:00Z");

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = haystack.find(needle); at != std::string::npos; at = haystack.find(needle, at + 1)) ++n;
  return n;
}

std::vector<ResourceMap> all_fixture_maps() {
  std::vector<ResourceMap> out;
  for (std::string_view name : kFixtureNames)
    for (ResourceMap& m : fixture_maps(name)) out.push_back(std::move(m));
  return out;
}

const std::string kMinimal =
    "<http://example.org/x/ReM> <http://purl.org/dc/terms/created> "
    "\"2009-06-01T00:00:00Z\"^^<http://www.w3.org/2001/XMLSchema#dateTime> .\n"
    "<http://example.org/x/ReM> <http://www.openarchives.org/ore/terms/describes> <http://example.org/x/A> .\n";

}  // namespace

TEST(CanonicalTest, Deterministic) {
  gen::Rng rng(1);
  const ResourceMap m = gen::resource_map(rng);
  EXPECT_EQ(serialize_canonical(m), serialize_canonical(m));
}

TEST(CanonicalTest, ScholarlyPublicationHasElevenStatementLinesPlusHeader) {
  const ResourceMap m = fixture_maps("scholarly-publication").front();
  EXPECT_EQ(count_lines(serialize_canonical(m)), 11u + 1u);
}

TEST(CanonicalTest, LineCountIsStatementsPlusHeader) {
  gen::Rng rng(2);
  for (int round = 0; round < 50; ++round) {
    const ResourceMap m = gen::resource_map(rng);
    EXPECT_EQ(count_lines(serialize_canonical(m)), m.statements().size() + 1);
  }
}

TEST(CanonicalTest, LinesAreSortedAndUnique) {
  gen::Rng rng(3);
  for (int round = 0; round < 30; ++round) {
    const std::string doc = serialize_canonical(gen::resource_map(rng));
    std::vector<std::string> lines;
    std::size_t start = 0;
    for (std::size_t nl = doc.find('\n'); nl != std::string::npos; nl = doc.find('\n', start)) {
      lines.push_back(doc.substr(start, nl - start));
      start = nl + 1;
    }
    EXPECT_EQ(start, doc.size());
    EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
    EXPECT_EQ(std::adjacent_find(lines.begin(), lines.end()), lines.end());
  }
}

TEST(CanonicalTest, ExactBytesForMinimalMap) {
  const ResourceMap m(x("ReM"), x("A"), Graph{{x("ReM"), vocab::describes(), x("A")}}, kAt);
  EXPECT_EQ(serialize_canonical(m), kMinimal);
}

TEST(CanonicalTest, EscapesLiterals) {
  const ResourceMap m = describe(new_aggregation(x("A"), {x("r")}), x("ReM"),
                                 {Triple{x("r"), vocab::format(), Literal("say \"hi\"\\\nbye")}}, kAt);
  const std::string doc = serialize_canonical(m);
  EXPECT_NE(doc.find("\"say \\\"hi\\\"\\\\\\nbye\" .\n"), std::string::npos) << doc;
}

TEST(CanonicalTest, RoundTripsFixtures) {
  for (const ResourceMap& m : all_fixture_maps()) {
    const std::string bytes = serialize_canonical(m);
    EXPECT_EQ(parse_canonical(bytes), m);
    EXPECT_EQ(serialize_canonical(parse_canonical(bytes)), bytes);
  }
}

TEST(CanonicalTest, RoundTripsRandomMaps) {
  gen::Rng rng(100);
  for (int round = 0; round < 100; ++round) {
    const ResourceMap m = gen::resource_map(rng);
    const std::string bytes = serialize_canonical(m);
    const ResourceMap back = parse_canonical(bytes);
    EXPECT_EQ(back, m);
    EXPECT_EQ(back.statements(), m.statements());
    EXPECT_EQ(serialize_canonical(back), bytes);
  }
}

TEST(CanonicalTest, EqualBytesIffEqualMaps) {
  gen::Rng rng(6);
  std::vector<ResourceMap> maps;
  for (int i = 0; i < 25; ++i) maps.push_back(gen::resource_map(rng, 3, 3));
  for (const ResourceMap& a : maps)
    for (const ResourceMap& b : maps) EXPECT_EQ(serialize_canonical(a) == serialize_canonical(b), a == b);
}

TEST(CanonicalTest, MissingDescribesIsStructuralError) {
  const std::string doc =
      "<http://example.org/x/ReM> <http://purl.org/dc/terms/created> "
      "\"2009-06-01T00:00:00Z\"^^<http://www.w3.org/2001/XMLSchema#dateTime> .\n"
      "<http://example.org/x/A> <http://www.openarchives.org/ore/terms/aggregates> <http://example.org/x/r> .\n";
  EXPECT_THROW(parse_canonical(doc), StructuralError);
}

TEST(CanonicalTest, InvalidUtf8ReportsByteOffset) {
  std::string doc = kMinimal;
  doc.insert(5, "\xff");
  try {
    parse_canonical(doc);
    FAIL() << "expected EncodingError";
  } catch (const EncodingError& e) {
    EXPECT_EQ(e.byte_offset(), 5u);
  }
}

TEST(CanonicalTest, MalformedLineReportsLineNumber) {
  const std::string doc = kMinimal + "<http://example.org/x/A> <http://p> oops .\n";
  try {
    parse_canonical(doc);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(CanonicalTest, RejectsLooseSyntax) {
  EXPECT_THROW(parse_canonical(kMinimal.substr(0, kMinimal.size() - 1)), ParseError);  // no final newline
  std::string doubled_space = kMinimal;
  doubled_space.replace(doubled_space.find("> <"), 3, ">  <");
  EXPECT_THROW(parse_canonical(doubled_space), ParseError);
  EXPECT_THROW(parse_canonical(kMinimal + "\n"), ParseError);
  EXPECT_THROW(parse_canonical_graph("<http://a> <http://b> \"bad \\t escape\" .\n"), ParseError);
}

TEST(CanonicalTest, AcceptsUnsortedInput) {
  const std::size_t split = kMinimal.find('\n') + 1;
  const std::string swapped = kMinimal.substr(split) + kMinimal.substr(0, split);
  EXPECT_EQ(serialize_canonical(parse_canonical(swapped)), kMinimal);
}

TEST(RdfXmlTest, RoundTripsFixtures) {
  for (const ResourceMap& m : all_fixture_maps()) {
    const std::string bytes = serialize_rdfxml(m);
    EXPECT_EQ(parse_rdfxml(bytes), m);
    EXPECT_EQ(serialize_rdfxml(parse_rdfxml(bytes)), bytes);
  }
}

TEST(RdfXmlTest, RoundTripsRandomMapsAndAgreesWithCanonical) {
  gen::Rng rng(200);
  for (int round = 0; round < 100; ++round) {
    const ResourceMap m = gen::resource_map(rng);
    const ResourceMap via_xml = parse_rdfxml(serialize_rdfxml(m));
    EXPECT_EQ(via_xml, m);
    EXPECT_EQ(via_xml.document_graph(), parse_canonical(serialize_canonical(m)).document_graph());
  }
}

TEST(RdfXmlTest, ScholarlyPublicationHasOneAggregationElement) {
  const std::string xml = serialize_rdfxml(fixture_maps("scholarly-publication").front());
  EXPECT_EQ(count_of(xml, "rdf:about=\"http://example.org/cens/scholarly-publication/A\""), 1u);
  EXPECT_EQ(count_of(xml, "<ore:aggregates "), 6u);
}

TEST(RdfXmlTest, ReportsWellFormednessErrorsWithPosition) {
  const std::string xml = serialize_rdfxml(fixture_maps("scholarly-publication").front());
  std::string broken = xml;
  const std::size_t at = broken.find("</rdf:Description>");
  broken.replace(at, 18, "</rdf:Descriptio>");
  const std::size_t expected_line = static_cast<std::size_t>(std::count(xml.begin(), xml.begin() + at, '\n')) + 1;
  try {
    parse_rdfxml(broken);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), expected_line);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(RdfXmlTest, RejectsUnknownElements) {
  std::string xml = serialize_rdfxml(fixture_maps("scholarly-publication").front());
  xml.replace(xml.find("<rdf:Description"), 16, "<rdf:Bag");
  EXPECT_THROW(parse_rdfxml(xml), ParseError);
}

TEST(RdfXmlTest, RejectsDoctype) {
  const std::string xml = "<?xml version=\"1.0\"?><!DOCTYPE rdf:RDF []><rdf:RDF xmlns:rdf=\"" +
                          std::string(vocab::kRdfNamespace) + "\"/>";
  EXPECT_THROW(parse_rdfxml(xml), ParseError);
}

TEST(RdfXmlTest, AcceptsForeignNamespacePredicates) {
  const ResourceMap m = describe(new_aggregation(x("A"), {x("r")}), x("ReM"),
                                 {Triple{x("r"), Uri("urn:example:p:cites"), x("A")},
                                  Triple{x("r"), Uri("http://other.example/vocab#tag"), Literal("t", std::nullopt, std::string("en"))}},
                                 kAt);
  const std::string xml = serialize_rdfxml(m);
  EXPECT_NE(xml.find("xmlns:ns1="), std::string::npos);
  EXPECT_EQ(parse_rdfxml(xml), m);
}

TEST(FormatTest, ExtensionsAndSniffing) {
  EXPECT_EQ(format_from_extension("a/b.remc"), Format::Canonical);
  EXPECT_EQ(format_from_extension("a/b.rdf"), Format::RdfXml);
  EXPECT_EQ(format_from_extension("a/b.txt"), std::nullopt);
  EXPECT_EQ(sniff_format(kMinimal), Format::Canonical);
  EXPECT_EQ(sniff_format("<?xml version=\"1.0\"?>\n<rdf:RDF/>"), Format::RdfXml);
  EXPECT_EQ(media_type(Format::Canonical), "application/x-ore-canonical");
  EXPECT_EQ(media_type(Format::RdfXml), "application/rdf+xml");
}

namespace {

std::size_t resource_links(const std::string& html) { return count_of(html, "class=\"resource\""); }

}  // namespace

TEST(SplashTest, ScholarlyPublicationListsSixResourcesAndVersions) {
  const auto maps = fixture_maps("scholarly-publication");
  const std::string html = render_splash(aggregation_of(maps.front()), maps);
  EXPECT_EQ(resource_links(html), 6u);
  EXPECT_NE(html.find("class=\"versions\""), std::string::npos);
  EXPECT_NE(html.find("hasVersion"), std::string::npos);
  EXPECT_NE(html.find("http://example.org/cens/scholarly-publication/A"), std::string::npos);
  EXPECT_EQ(html.find("<script"), std::string::npos);
}

TEST(SplashTest, SingletonHasOneLink) {
  const Aggregation a = new_aggregation(x("A"), {x("r")});
  const std::vector<ResourceMap> maps{describe(a, x("ReM"), {}, kAt)};
  EXPECT_EQ(resource_links(render_splash(a, maps)), 1u);
}

TEST(SplashTest, TotalAggregationExpandsNestedStages) {
  const auto maps = fixture_maps("seismology");
  const ResourceMap* total = nullptr;
  for (const ResourceMap& m : maps)
    if (m.describes() == fixture_uri("seismology", "A-t")) total = &m;
  ASSERT_NE(total, nullptr);
  const std::string html = render_splash(aggregation_of(*total), maps);
  for (const char* local : {"A-1", "A-2", "A-3", "AR-2", "mini-seed-dataset", "sac-dataset"})
    EXPECT_NE(html.find("href=\"" + fixture_uri("seismology", local).str() + "\""), std::string::npos) << local;
  // A-1 (5) + A-2 (2 + AR-2) + AR-2 (2) + A-3 (5) + the three stages themselves.
  EXPECT_EQ(resource_links(html), 5u + 3u + 2u + 5u + 3u);
}

TEST(SplashTest, TerminatesOnCyclesAndIsPure) {
  Aggregation a = new_aggregation(x("A"), {x("a-leaf")});
  Aggregation b = new_aggregation(x("B"), {x("b-leaf")});
  a = nest(a, Aggregation(x("B")));
  b = nest(b, Aggregation(x("A")));
  const std::vector<ResourceMap> maps{describe(a, x("ReM-A"), {}, kAt), describe(b, x("ReM-B"), {}, kAt)};
  const std::string html = render_splash(a, maps);
  EXPECT_EQ(html, render_splash(a, maps));
  EXPECT_LE(resource_links(html), 4u);
}

TEST(SplashTest, ListsRelationshipsVerbatim) {
  const auto maps = fixture_maps("scholarly-publication");
  const std::string html = render_splash(aggregation_of(maps.front()), maps);
  EXPECT_NE(html.find("title=\"" + vocab::has_bibliographic_description().str() + "\""), std::string::npos);
}

TEST(SplashTest, EscapesHtml) {
  const Aggregation a = new_aggregation(x("A"), {x("r")});
  const std::vector<ResourceMap> maps{
      describe(a, x("ReM"), {Triple{x("r"), vocab::format(), Literal("<b>&")}}, kAt)};
  const std::string html = render_splash(a, maps);
  EXPECT_EQ(html.find("<b>&"), std::string::npos);
  EXPECT_NE(html.find("&lt;b&gt;&amp;"), std::string::npos);
}
