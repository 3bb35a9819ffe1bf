#pragma once

// Gathering Resource Maps from many places into one union graph, and queries
// over that graph.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "oreweave/model.hpp"

namespace oreweave {

// Merge of many maps' statement graphs, remembering which maps asserted each
// triple.
class UnionGraph {
 public:
  void add(const ResourceMap& rem);
  void merge(const UnionGraph& other);

  const Graph& graph() const noexcept { return graph_; }
  const std::map<Triple, std::set<Uri>>& provenance() const noexcept { return provenance_; }
  const std::set<Uri>& provenance_of(const Triple& t) const;

  friend bool operator==(const UnionGraph&, const UnionGraph&) = default;

 private:
  Graph graph_;
  std::map<Triple, std::set<Uri>> provenance_;
};

UnionGraph union_of(std::span<const ResourceMap> maps);

struct SourceOutcome {
  std::string source;
  bool ok = false;
  std::size_t triples = 0;  // statements in the map fetched from this source
  std::string reason;       // why it failed
  std::optional<ResourceMap> map;
};

struct HarvestResult {
  UnionGraph graph;
  std::vector<SourceOutcome> outcomes;  // in source order

  // "OK <source> <triples>" / "FAIL <source> <reason>", one line per source.
  std::string report() const;
  std::vector<ResourceMap> maps() const;
};

struct HarvestOptions {
  std::chrono::seconds timeout{10};
  // Fetch sources in parallel; merging is always done in source order.
  bool concurrent = true;
};

// Sources are http(s) URLs, file:// URLs or paths. A directory expands to the
// .remc and .rdf files directly inside it, in name order. Formats are picked
// by extension, then Content-Type, then by sniffing the bytes. A failing source
// is reported and skipped.
HarvestResult harvest(const std::vector<std::string>& sources, const HarvestOptions& options = {});

// Every URI mentioned (as subject or object) by at least two distinct maps,
// with the maps mentioning it. Objects of rdf:type are classes and do not count.
std::map<Uri, std::set<Uri>> co_referenced(const UnionGraph& graph);

struct TraceStep {
  Triple triple;
  bool forward;  // walked subject -> object

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct TracePath {
  Uri target;
  std::vector<TraceStep> steps;  // from the entry point to target

  std::size_t depth() const noexcept { return steps.size(); }
  friend bool operator==(const TracePath&, const TracePath&) = default;
};

struct TraceResult {
  std::set<Uri> nodes;           // includes the entry
  Graph subgraph;                // triples among reached nodes, plus their literals
  std::vector<TracePath> paths;  // one shortest path per reached node other than the entry

  // One line per path: "<depth>\t<target>\t<hops>".
  std::string to_text() const;
};

// Breadth-first walk from entry over triples taken as undirected edges between
// URIs. rdf:type edges are not followed. Neighbours are visited in canonical
// order, so the paths are deterministic.
TraceResult trace(const UnionGraph& graph, const Uri& entry,
                  std::optional<std::size_t> max_depth = std::nullopt);

}  // namespace oreweave
