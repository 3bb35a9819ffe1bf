#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oreweave/model.hpp"
#include "oreweave/serialization.hpp"

namespace oreweave {

// A collection of Resource Maps, optionally backed by a directory holding one
// canonical file per map, named by the percent-encoded ReM URI.
//
// A MapStore is a plain value: copy it to get a snapshot. Mutation is
// single-writer.
class MapStore {
 public:
  struct Entry {
    std::optional<std::filesystem::path> path;  // empty for in-memory stores
    Format format = Format::Canonical;
    ResourceMap map;
  };

  // In-memory store.
  MapStore() = default;

  // Creates root if needed and loads every .remc and .rdf file in it. Loading
  // does not reject two maps for one aggregation; validate() reports that (E2).
  // Throws on unreadable or unparsable files.
  static MapStore open(const std::filesystem::path& root);

  const std::optional<std::filesystem::path>& root() const noexcept { return root_; }

  // Adds or replaces the map with rem.uri(). Putting an identical map is a
  // no-op. Throws ConflictError if another map already describes the same
  // aggregation.
  void put(const ResourceMap& rem);

  std::optional<ResourceMap> get(const Uri& rem_uri) const;
  const ResourceMap* find(const Uri& rem_uri) const;
  // Lowest ReM URI among maps describing agg_uri.
  const ResourceMap* find_by_aggregation(const Uri& agg_uri) const;

  // All maps, ordered by ReM URI.
  std::vector<ResourceMap> maps() const;
  const std::map<Uri, Entry>& index() const noexcept { return index_; }
  std::size_t size() const noexcept { return index_.size(); }
  bool empty() const noexcept { return index_.empty(); }

  // Canonical bytes of a map: the file contents for directory-backed canonical
  // entries, a fresh serialization otherwise.
  std::string canonical_bytes(const Uri& rem_uri) const;

 private:
  std::optional<std::filesystem::path> root_;
  std::map<Uri, Entry> index_;
};

// "<percent-encoded ReM URI>.remc"
std::string store_file_name(const Uri& rem_uri);

ValidationReport validate(const MapStore& store);

std::string read_file(const std::filesystem::path& path);
// Writes through a temporary file and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace oreweave
