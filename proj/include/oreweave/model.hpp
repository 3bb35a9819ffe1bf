#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "oreweave/graph.hpp"
#include "oreweave/text.hpp"

namespace oreweave {

using Relationship = Triple;

class ResourceMap;

// A URI-identified cluster of aggregated resources.
//
// Resources keep their authored order. An aggregation may be empty while it
// is being built; validate() reports empty ones (E1).
class Aggregation {
 public:
  explicit Aggregation(Uri uri) : uri_(std::move(uri)) {}

  const Uri& uri() const noexcept { return uri_; }
  const std::vector<Uri>& resources() const noexcept { return resources_; }
  // Statements about the aggregation itself (subject == uri()).
  const std::vector<Triple>& metadata() const noexcept { return metadata_; }
  // Resources known to be aggregations in their own right.
  const std::set<Uri>& nested() const noexcept { return nested_; }

  bool contains(const Uri& resource) const;

  // Throws ValidationError on a duplicate or on the aggregation's own URI.
  void add_resource(Uri resource);
  // Throws ValidationError unless t.subject == uri().
  void add_metadata(Triple t);

  friend Aggregation nest(const Aggregation& parent, const Aggregation& child);
  friend Aggregation aggregation_of(const ResourceMap& rem);

  friend bool operator==(const Aggregation&, const Aggregation&) = default;

 private:
  Uri uri_;
  std::vector<Uri> resources_;
  std::vector<Triple> metadata_;
  std::set<Uri> nested_;
};

// The machine-readable description of exactly one aggregation.
class ResourceMap {
 public:
  // Throws StructuralError if uri == describes, if statements lack the
  // (uri ore:describes describes) triple, if uri describes anything else, or
  // if statements carry a creation-time triple for uri (that lives in created).
  ResourceMap(Uri uri, Uri describes, Graph statements, Timestamp created);

  const Uri& uri() const noexcept { return uri_; }
  const Uri& describes() const noexcept { return describes_; }
  const Graph& statements() const noexcept { return statements_; }
  Timestamp created() const noexcept { return created_; }

  // The resources named by ore:aggregates, in canonical order.
  std::vector<Uri> resources() const;

  // statements plus the creation-time header triple.
  Graph document_graph() const;
  Triple created_triple() const;

  // Inverse of document_graph(). Throws StructuralError.
  static ResourceMap from_document_graph(const Graph& graph);

  friend bool operator==(const ResourceMap&, const ResourceMap&) = default;

 private:
  Uri uri_;
  Uri describes_;
  Graph statements_;
  Timestamp created_;
};

// Throws ValidationError on a duplicate resource or self-aggregation.
Aggregation new_aggregation(Uri uri, const std::vector<Uri>& resources);

// Appends child's URI to parent's resources and marks it as nested. The child
// still needs a Resource Map of its own.
Aggregation nest(const Aggregation& parent, const Aggregation& child);

// One hasVersion relationship between each consecutive pair. Needs at least two
// pairwise distinct URIs.
std::vector<Relationship> assert_version_chain(const std::vector<Uri>& versions);

enum class DiagnosticCode { E1, E2, E3, W1, W2 };

std::string_view to_string(DiagnosticCode code);
constexpr bool is_error(DiagnosticCode code) {
  return code == DiagnosticCode::E1 || code == DiagnosticCode::E2 || code == DiagnosticCode::E3;
}

struct Diagnostic {
  DiagnosticCode code;
  std::string message;
  Uri subject;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
  friend auto operator<=>(const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.code, a.subject, a.message) <=> std::tie(b.code, b.subject, b.message);
  }
};

// Builds the Resource Map for agg. Statements are the ore:describes triple, one
// ore:aggregates per resource, one rdf:type ore:Aggregation per nested
// resource, the aggregation metadata, and extra.
//
// Throws ValidationError when rem_uri equals the aggregation URI or when extra
// holds a creation-time triple for rem_uri. Relationships touching URIs outside
// the aggregation are accepted and reported through warnings (W2) if given.
ResourceMap describe(const Aggregation& agg, const Uri& rem_uri,
                     const std::vector<Relationship>& extra = {},
                     std::optional<Timestamp> created = std::nullopt,
                     std::vector<Diagnostic>* warnings = nullptr);

// Reconstructs the aggregation a map describes. Resources come back in
// canonical order; statements about the aggregation become metadata.
Aggregation aggregation_of(const ResourceMap& rem);

// Statements other than the ones describe() derives from the aggregation.
std::vector<Relationship> relationships_of(const ResourceMap& rem);

struct ValidationReport {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;

  bool ok() const noexcept { return errors.empty(); }
  // One line per diagnostic, then "N errors, M warnings".
  std::string to_text() const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Structural checks over a set of Resource Maps:
//   E1 aggregation with zero resources
//   E2 more than one map describing the same aggregation
//   E3 cycle in the nesting relation (one per strongly connected component)
//   W1 resource marked as a nested aggregation that has no map in the set
//   W2 relationship whose subject or object is unknown to every aggregation
// The result is sorted, so it does not depend on the order of maps.
ValidationReport validate(std::span<const ResourceMap> maps);

}  // namespace oreweave
