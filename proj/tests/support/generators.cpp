#include "generators.hpp"

#include "oreweave/vocab.hpp"

namespace gen {

using namespace oreweave;

Uri node(Rng& rng, std::size_t pool, std::string_view prefix) {
  return Uri(std::string(prefix) + std::to_string(rng.below(pool)));
}

Uri predicate(Rng& rng) {
  static const std::vector<std::string> kPredicates = {
      "http://purl.org/dc/terms/hasVersion", "http://purl.org/dc/terms/hasFormat",
      "http://example.org/p/relatedTo", "http://example.org/p/derivedFrom",
      "urn:example:p:cites",
  };
  return Uri(kPredicates[rng.below(kPredicates.size())]);
}

std::string text(Rng& rng, std::size_t max_length) {
  static const std::vector<std::string> kPieces = {
      "a", "b", "Z", "0", " ", "\"", "\\", "\n", "\t", "\r", "<", ">", "&", "'", "é", "λ", "数据", "🙂", "\\n", "^^",
      "@en", ".",
  };
  std::string out;
  const std::size_t n = rng.below(max_length + 1);
  for (std::size_t i = 0; i < n; ++i) out += kPieces[rng.below(kPieces.size())];
  return out;
}

Literal literal(Rng& rng) {
  switch (rng.below(4)) {
    case 0: return Literal(text(rng), std::nullopt, std::string(rng.chance(0.5) ? "en" : "de-CH"));
    case 1: return Literal(text(rng), Uri("http://www.w3.org/2001/XMLSchema#string"));
    case 2: return Literal(std::to_string(rng.below(100000)), Uri("http://www.w3.org/2001/XMLSchema#integer"));
    default: return Literal(text(rng));
  }
}

Graph graph(Rng& rng, std::size_t nodes, std::size_t max_triples, bool literals) {
  Graph g;
  const std::size_t n = rng.below(max_triples + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Uri s = node(rng, nodes);
    Uri p = predicate(rng);
    if (literals && rng.chance(0.2))
      g.add(Triple{std::move(s), std::move(p), literal(rng)});
    else
      g.add(Triple{std::move(s), std::move(p), node(rng, nodes)});
  }
  return g;
}

ResourceMap resource_map(Rng& rng, std::size_t max_resources, std::size_t max_extra,
                         std::string_view base) {
  const std::string b(base);
  const Uri agg_uri(b + "A" + std::to_string(rng.below(1000)));
  const Uri rem_uri(agg_uri.str() + "/ReM");
  const std::size_t n = rng.between(1, max_resources);
  std::vector<Uri> resources;
  for (std::size_t i = 0; i < n; ++i) resources.push_back(Uri(agg_uri.str() + "/res-" + std::to_string(i)));
  const Aggregation agg = new_aggregation(agg_uri, resources);

  auto pick = [&]() -> Uri {
    const std::size_t r = rng.below(10);
    if (r == 0) return agg_uri;
    if (r == 1) return Uri("http://elsewhere.example.net/x" + std::to_string(rng.below(5)));
    return resources[rng.below(resources.size())];
  };
  std::vector<Relationship> extra;
  const std::size_t k = rng.below(max_extra + 1);
  for (std::size_t i = 0; i < k; ++i) {
    Uri s = pick();
    if (rng.chance(0.4))
      extra.push_back(Triple{std::move(s), predicate(rng), literal(rng)});
    else
      extra.push_back(Triple{std::move(s), predicate(rng), pick()});
  }
  const auto created = Timestamp(std::chrono::seconds(rng.between(0, 4'000'000'000ULL)));
  return describe(agg, rem_uri, extra, created);
}

}  // namespace gen
