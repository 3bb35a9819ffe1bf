#include "oreweave/store.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "oreweave/error.hpp"

namespace oreweave {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string store_file_name(const Uri& rem_uri) {
  std::string name = percent_encode(rem_uri.str()) + ".remc";
  if (name.size() > 250) throw Error("Resource Map URI too long for a file name: " + rem_uri.str());
  return name;
}

MapStore MapStore::open(const fs::path& root) {
  MapStore store;
  fs::create_directories(root);
  store.root_ = root;

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".remc" || ext == ".rdf") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const fs::path& file : files) {
    const Format format = file.extension() == ".remc" ? Format::Canonical : Format::RdfXml;
    const std::string bytes = read_file(file);
    std::optional<ResourceMap> rem;
    try {
      rem = parse(bytes, format);
    } catch (const Error& e) {
      throw Error(file.string() + ": " + e.what());
    }
    const Uri key = rem->uri();
    if (store.index_.count(key))
      throw ConflictError(file.string() + ": Resource Map " + key.str() + " is stored twice");
    store.index_.emplace(key, Entry{file, format, std::move(*rem)});
  }
  return store;
}

void MapStore::put(const ResourceMap& rem) {
  for (const auto& [key, entry] : index_) {
    if (key != rem.uri() && entry.map.describes() == rem.describes())
      throw ConflictError("aggregation " + rem.describes().str() + " already has Resource Map " +
                          key.str() + "; refusing " + rem.uri().str());
  }
  auto existing = index_.find(rem.uri());
  if (existing != index_.end() && existing->second.map == rem &&
      existing->second.format == Format::Canonical)
    return;

  Entry entry{std::nullopt, Format::Canonical, rem};
  if (root_) {
    const fs::path path = *root_ / store_file_name(rem.uri());
    write_file_atomic(path, serialize_canonical(rem));
    if (existing != index_.end() && existing->second.path && *existing->second.path != path)
      fs::remove(*existing->second.path);
    entry.path = path;
  }
  index_.insert_or_assign(rem.uri(), std::move(entry));
}

std::optional<ResourceMap> MapStore::get(const Uri& rem_uri) const {
  if (const ResourceMap* m = find(rem_uri)) return *m;
  return std::nullopt;
}

const ResourceMap* MapStore::find(const Uri& rem_uri) const {
  auto it = index_.find(rem_uri);
  return it == index_.end() ? nullptr : &it->second.map;
}

const ResourceMap* MapStore::find_by_aggregation(const Uri& agg_uri) const {
  for (const auto& [_, entry] : index_)
    if (entry.map.describes() == agg_uri) return &entry.map;
  return nullptr;
}

std::vector<ResourceMap> MapStore::maps() const {
  std::vector<ResourceMap> out;
  out.reserve(index_.size());
  for (const auto& [_, entry] : index_) out.push_back(entry.map);
  return out;
}

std::string MapStore::canonical_bytes(const Uri& rem_uri) const {
  auto it = index_.find(rem_uri);
  if (it == index_.end()) throw Error("no Resource Map " + rem_uri.str() + " in store");
  const Entry& e = it->second;
  if (e.path && e.format == Format::Canonical) return read_file(*e.path);
  return serialize_canonical(e.map);
}

ValidationReport validate(const MapStore& store) {
  const std::vector<ResourceMap> all = store.maps();
  return validate(std::span<const ResourceMap>(all));
}

}  // namespace oreweave
