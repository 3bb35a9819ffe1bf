#include <gtest/gtest.h>

#include <httplib.h>

#include <thread>

#include "generators.hpp"
#include "oracles.hpp"
#include "oreweave/fixtures.hpp"
#include "oreweave/harvest.hpp"
#include "oreweave/serialization.hpp"
#include "oreweave/store.hpp"
#include "oreweave/vocab.hpp"
#include "process.hpp"

using namespace oreweave;
using testing_support::TempDir;

namespace {

std::string line_of(const Triple& t) {
  return t.subject.str() + " " + t.predicate.str() + " " + t.object.to_string();
}

// Writes maps as files and returns their paths.
std::vector<std::string> write_maps(const TempDir& dir, const std::vector<ResourceMap>& maps,
                                    Format format = Format::Canonical) {
  std::vector<std::string> paths;
  for (const ResourceMap& m : maps) {
    const std::string name = percent_encode(m.uri().str()) + std::string(extension(format));
    write_file_atomic(dir.path() / name, serialize(m, format));
    paths.push_back((dir.path() / name).string());
  }
  return paths;
}

std::map<std::string, std::set<std::string>> mentions_by_map(const std::vector<ResourceMap>& maps) {
  std::map<std::string, std::set<std::string>> out;
  for (const ResourceMap& m : maps) {
    for (const Triple& t : m.statements()) {
      out[m.uri().str()].insert(t.subject.str());
      if (t.object.is_uri() && t.predicate.str() != std::string(vocab::kRdfNamespace) + "type")
        out[m.uri().str()].insert(t.object.uri().str());
    }
  }
  return out;
}

}  // namespace

TEST(UnionGraphTest, ProvenanceAudit) {
  const auto maps = fixture_maps("seismology");
  const UnionGraph u = union_of(maps);
  for (const Triple& t : u.graph()) {
    const std::set<Uri>& from = u.provenance_of(t);
    EXPECT_FALSE(from.empty());
    for (const Uri& rem : from) {
      const auto it = std::find_if(maps.begin(), maps.end(), [&](const ResourceMap& m) { return m.uri() == rem; });
      ASSERT_NE(it, maps.end());
      EXPECT_TRUE(it->statements().contains(t));
    }
  }
}

TEST(HarvestTest, EmptySourceList) {
  const HarvestResult r = harvest({});
  EXPECT_TRUE(r.graph.graph().empty());
  EXPECT_TRUE(r.outcomes.empty());
  EXPECT_EQ(r.report(), "");
}

TEST(HarvestTest, DeterministicAcrossRuns) {
  TempDir dir;
  const auto paths = write_maps(dir, fixture_maps("seismology"));
  EXPECT_EQ(harvest(paths).graph, harvest(paths).graph);
  EXPECT_EQ(harvest(paths).report(), harvest(paths, {std::chrono::seconds(5), false}).report());
}

TEST(HarvestTest, TripleCountMatchesSortDedup) {
  TempDir dir;
  std::vector<ResourceMap> maps = fixture_maps("seismology");
  for (ResourceMap& m : fixture_maps("environmental")) maps.push_back(std::move(m));
  const auto paths = write_maps(dir, maps);
  std::vector<std::string> lines;
  for (const ResourceMap& m : maps)
    for (const Triple& t : m.statements()) lines.push_back(line_of(t));
  EXPECT_EQ(harvest(paths).graph.graph().size(), oracle::sort_dedup_count(lines));
}

TEST(HarvestTest, FailuresAreReportedPerSource) {
  TempDir dir;
  auto paths = write_maps(dir, fixture_maps("scholarly-publication"));
  write_file_atomic(dir.path() / "garbage.remc", "garbage\n");
  paths.push_back((dir.path() / "garbage.remc").string());
  paths.push_back((dir.path() / "missing.remc").string());
  paths.push_back("http://127.0.0.1:1/nothing.remc");
  const HarvestResult r = harvest(paths, {std::chrono::seconds(2), true});
  ASSERT_EQ(r.outcomes.size(), 4u);
  EXPECT_TRUE(r.outcomes[0].ok);
  EXPECT_FALSE(r.outcomes[1].ok);
  EXPECT_FALSE(r.outcomes[2].ok);
  EXPECT_FALSE(r.outcomes[3].ok);
  const std::string report = r.report();
  EXPECT_EQ(report.rfind("OK " + paths[0] + " 11\n", 0), 0u) << report;
  EXPECT_NE(report.find("FAIL " + paths[1] + " "), std::string::npos);
  EXPECT_NE(report.find("FAIL http://127.0.0.1:1/nothing.remc "), std::string::npos);
  EXPECT_EQ(r.graph.graph().size(), 11u);
}

TEST(HarvestTest, FileUrlsDirectoriesAndRdfXml) {
  TempDir dir;
  const auto maps = fixture_maps("environmental");
  write_maps(dir, {maps[0], maps[1]}, Format::RdfXml);
  write_maps(dir, {maps[2], maps[3]}, Format::Canonical);
  const HarvestResult from_dir = harvest({dir.str()});
  EXPECT_EQ(from_dir.outcomes.size(), 4u);
  EXPECT_EQ(from_dir.graph, union_of(maps));
  const HarvestResult from_url = harvest({"file://" + dir.str()});
  EXPECT_EQ(from_url.graph, from_dir.graph);
}

TEST(HarvestTest, UnknownExtensionIsSniffed) {
  TempDir dir;
  const ResourceMap m = fixture_maps("scholarly-publication").front();
  write_file_atomic(dir.path() / "a.txt", serialize_rdfxml(m));
  write_file_atomic(dir.path() / "b.txt", serialize_canonical(m));
  const HarvestResult r = harvest({dir.str("a.txt"), dir.str("b.txt")});
  EXPECT_TRUE(r.outcomes[0].ok);
  EXPECT_TRUE(r.outcomes[1].ok);
  EXPECT_EQ(r.graph.graph(), m.statements());
}

TEST(HarvestTest, ConcatenationEqualsMergeOfParts) {
  TempDir dir;
  std::vector<ResourceMap> maps = fixture_maps("seismology");
  for (ResourceMap& m : fixture_maps("environmental")) maps.push_back(std::move(m));
  const auto paths = write_maps(dir, maps);
  for (std::size_t split = 0; split <= paths.size(); ++split) {
    const std::vector<std::string> a(paths.begin(), paths.begin() + static_cast<long>(split));
    const std::vector<std::string> b(paths.begin() + static_cast<long>(split), paths.end());
    UnionGraph merged = harvest(a).graph;
    merged.merge(harvest(b).graph);
    EXPECT_EQ(harvest(paths).graph, merged);
  }
}

TEST(HarvestTest, OverHttpWithNegotiation) {
  const auto maps = fixture_maps("seismology");
  httplib::Server server;
  std::vector<std::string> accepts;
  std::mutex accepts_mutex;
  server.Get(R"(/maps/(\d+))", [&](const httplib::Request& req, httplib::Response& res) {
    {
      std::lock_guard lock(accepts_mutex);
      accepts.push_back(req.get_header_value("Accept"));
    }
    const std::size_t i = std::stoul(req.matches[1]);
    if (i >= maps.size()) {
      res.status = 404;
      return;
    }
    // Odd maps come back as RDF/XML, labelled only by Content-Type.
    if (i % 2) res.set_content(serialize_rdfxml(maps[i]), "application/rdf+xml");
    else res.set_content(serialize_canonical(maps[i]), "application/x-ore-canonical");
  });
  server.Get("/moved", [](const httplib::Request&, httplib::Response& res) { res.set_redirect("/maps/0", 303); });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread thread([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  std::vector<std::string> sources;
  for (std::size_t i = 0; i < maps.size(); ++i) sources.push_back(base + "/maps/" + std::to_string(i));
  sources.push_back(base + "/maps/99");
  sources.push_back(base + "/moved");
  const HarvestResult r = harvest(sources);
  server.stop();
  thread.join();

  for (std::size_t i = 0; i < maps.size(); ++i) EXPECT_TRUE(r.outcomes[i].ok) << r.report();
  EXPECT_FALSE(r.outcomes[maps.size()].ok);
  EXPECT_NE(r.outcomes[maps.size()].reason.find("404"), std::string::npos);
  EXPECT_TRUE(r.outcomes.back().ok);
  EXPECT_EQ(r.graph, union_of(maps));
  for (const std::string& a : accepts)
    EXPECT_EQ(a, "application/x-ore-canonical, application/rdf+xml;q=0.9");
}

TEST(CoReferenceTest, SingleMapIsEmpty) {
  EXPECT_TRUE(co_referenced(union_of(fixture_maps("scholarly-publication"))).empty());
}

TEST(CoReferenceTest, SeismologyStageAggregations) {
  const auto maps = fixture_maps("seismology");
  const auto result = co_referenced(union_of(maps));
  auto u = [](const char* local) { return fixture_uri("seismology", local); };
  const std::map<Uri, std::set<Uri>> expected{
      {u("A-1"), {u("ReM-1"), u("ReM-t")}},
      {u("A-2"), {u("ReM-2"), u("ReM-t")}},
      {u("A-3"), {u("ReM-3"), u("ReM-t")}},
      {u("AR-2"), {u("ReM-2"), u("ReM-AR-2")}},
  };
  EXPECT_EQ(result, expected);
}

TEST(CoReferenceTest, MatchesNaiveInvertedIndex) {
  gen::Rng rng(77);
  for (int round = 0; round < 20; ++round) {
    std::vector<ResourceMap> maps;
    const std::size_t n = rng.between(1, 6);
    for (std::size_t i = 0; i < n; ++i) maps.push_back(gen::resource_map(rng, 6, 8, "http://example.org/c/"));
    // Maps sharing a ReM URI would be one document; keep the first.
    std::map<Uri, ResourceMap> unique;
    for (ResourceMap& m : maps) unique.emplace(m.uri(), std::move(m));
    std::vector<ResourceMap> distinct;
    for (auto& [_, m] : unique) distinct.push_back(m);

    std::map<std::string, std::set<std::string>> actual;
    for (const auto& [uri, rems] : co_referenced(union_of(distinct)))
      for (const Uri& r : rems) actual[uri.str()].insert(r.str());
    EXPECT_EQ(actual, oracle::inverted_index(mentions_by_map(distinct)));
  }
}

namespace {

std::vector<oracle::Edge> trace_edges(const Graph& g) {
  std::vector<oracle::Edge> out;
  for (const Triple& t : g)
    if (t.object.is_uri() && t.predicate != vocab::rdf_type()) out.emplace_back(t.subject.str(), t.object.uri().str());
  return out;
}

std::set<std::string> strings(const std::set<Uri>& uris) {
  std::set<std::string> out;
  for (const Uri& u : uris) out.insert(u.str());
  return out;
}

}  // namespace

TEST(TraceTest, EmptyUnion) {
  const Uri entry("http://example.org/x");
  const TraceResult r = trace(UnionGraph{}, entry);
  EXPECT_EQ(r.nodes, std::set<Uri>{entry});
  EXPECT_TRUE(r.paths.empty());
  EXPECT_TRUE(r.subgraph.empty());
}

TEST(TraceTest, SacDatasetReachesPublications) {
  const UnionGraph u = union_of(fixture_maps("seismology"));
  auto s = [](const char* local) { return fixture_uri("seismology", local); };
  const TraceResult r = trace(u, s("sac-dataset"));
  for (const char* p : {"lukac-2006-publication", "husker-2008-publication", "lukac-2007-technical-report"})
    EXPECT_TRUE(r.nodes.count(s(p))) << p;
  for (const TracePath& p : r.paths) {
    // Each path starts at the entry and chains hop to hop.
    Uri at = s("sac-dataset");
    for (const TraceStep& step : p.steps) {
      EXPECT_EQ(step.forward ? step.triple.subject : step.triple.object.uri(), at);
      at = step.forward ? step.triple.object.uri() : step.triple.subject;
    }
    EXPECT_EQ(at, p.target);
  }
}

TEST(TraceTest, MatchesUndirectedBfsOracle) {
  gen::Rng rng(606);
  for (int round = 0; round < 50; ++round) {
    UnionGraph u;
    const std::size_t maps = rng.between(1, 4);
    for (std::size_t i = 0; i < maps; ++i) {
      const Uri rem("http://example.org/t/ReM" + std::to_string(i));
      const Uri agg("http://example.org/t/A" + std::to_string(i));
      Graph g = gen::graph(rng, 60, 40);
      g.add(Triple{rem, vocab::describes(), agg});
      g.add(Triple{agg, vocab::aggregates(), gen::node(rng, 60)});
      u.add(ResourceMap(rem, agg, g, Timestamp{}));
    }
    const Uri entry = gen::node(rng, 60);
    std::optional<std::size_t> depth;
    if (rng.chance(0.3)) depth = rng.below(4);
    const TraceResult r = trace(u, entry, depth);
    EXPECT_EQ(strings(r.nodes), oracle::undirected_bfs(trace_edges(u.graph()), entry.str(), depth));
    EXPECT_EQ(r.paths.size(), r.nodes.size() - 1);
    for (const TracePath& p : r.paths)
      if (depth) EXPECT_LE(p.depth(), *depth);
  }
}

TEST(TraceTest, MonotoneInDepth) {
  const UnionGraph u = union_of(fixture_maps("environmental"));
  const Uri entry = fixture_uri("environmental", "contaminant-data.kml");
  std::set<Uri> previous;
  for (std::size_t d = 0; d < 8; ++d) {
    const TraceResult r = trace(u, entry, d);
    EXPECT_TRUE(std::includes(r.nodes.begin(), r.nodes.end(), previous.begin(), previous.end()));
    previous = r.nodes;
  }
  EXPECT_EQ(previous, trace(u, entry).nodes);
}

TEST(TraceTest, TextListsDepthTargetAndHops) {
  const UnionGraph u = union_of(fixture_maps("scholarly-publication"));
  const TraceResult r = trace(u, fixture_uri("scholarly-publication", "manuscript"), 1);
  const std::string text = r.to_text();
  EXPECT_NE(text.find("1\t" + fixture_uri("scholarly-publication", "revision").str() + "\t<"), std::string::npos) << text;
}
