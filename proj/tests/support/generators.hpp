#pragma once

// Seeded random inputs for property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oreweave/model.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// "http://example.org/n<i>" style node names drawn from a pool of `pool` names.
oreweave::Uri node(Rng& rng, std::size_t pool, std::string_view prefix = "http://example.org/n");
oreweave::Uri predicate(Rng& rng);

// Text with quotes, backslashes, newlines, tabs, carriage returns and
// multi-byte UTF-8 mixed in.
std::string text(Rng& rng, std::size_t max_length = 24);

// Plain, language-tagged or typed, at random.
oreweave::Literal literal(Rng& rng);

oreweave::Graph graph(Rng& rng, std::size_t nodes, std::size_t max_triples, bool literals = true);

// A map over up to max_resources resources with up to max_extra further
// statements among them, their aggregation, and outside URIs.
oreweave::ResourceMap resource_map(Rng& rng, std::size_t max_resources = 30, std::size_t max_extra = 50,
                                   std::string_view base = "http://example.org/r/");

}  // namespace gen
