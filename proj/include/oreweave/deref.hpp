#pragma once

// Publishing a MapStore over HTTP. An aggregation URL answers 303 See Other,
// pointing people at the splash page and programs at the Resource Map.
//
// URL scheme, where <id> is the percent-encoded full URI:
//   /agg/<aggregation id>
//   /rem/<ReM id>.remc    canonical form
//   /rem/<ReM id>.rdf     RDF/XML
//   /splash/<aggregation id>.html

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "oreweave/store.hpp"

namespace httplib {
class Server;
}

namespace oreweave {

struct DerefRequest {
  std::string path;                 // request target without the query
  std::vector<std::string> accept;  // media ranges, most preferred first; empty means no preference

  // Parses an Accept header value, ordering ranges by q (stable) and dropping
  // q=0 ranges.
  static DerefRequest from_header(std::string path, std::string_view accept_header);
};

struct DerefResponse {
  int status = 200;
  std::string content_type;
  std::string body;
  std::optional<std::string> location;

  friend bool operator==(const DerefResponse&, const DerefResponse&) = default;
};

std::vector<std::string> parse_accept(std::string_view header);

std::string aggregation_path(const Uri& agg_uri);
std::string rem_path(const Uri& rem_uri, Format format);
std::string splash_path(const Uri& agg_uri);

// Everything the service answers with, computed once. Bodies are fixed bytes,
// so every request for the same URL sees the same bytes.
class StoreSnapshot {
 public:
  explicit StoreSnapshot(const MapStore& store);

  DerefResponse resolve(const DerefRequest& req) const;

  std::size_t size() const noexcept { return by_rem_.size(); }

 private:
  struct Documents {
    std::string canonical;
    std::string rdfxml;
  };
  std::map<std::string, Uri> rem_of_aggregation_;  // aggregation URI -> ReM URI
  std::map<std::string, std::string> splash_;      // aggregation URI -> HTML
  std::map<std::string, Documents> by_rem_;        // ReM URI -> bytes
};

DerefResponse resolve(const MapStore& store, const DerefRequest& req);

// HTTP front end over a swappable snapshot. Requests in flight keep the
// snapshot they started with.
class DerefServer {
 public:
  explicit DerefServer(std::shared_ptr<const StoreSnapshot> snapshot);
  ~DerefServer();
  DerefServer(const DerefServer&) = delete;
  DerefServer& operator=(const DerefServer&) = delete;

  // Binds and starts answering on a background thread. Port 0 picks a free
  // port. Returns the bound port; throws Error if the port cannot be bound.
  int start(const std::string& host, int port);
  void stop();
  int port() const noexcept { return port_; }

  void reload(std::shared_ptr<const StoreSnapshot> snapshot);
  std::shared_ptr<const StoreSnapshot> snapshot() const;

 private:
  mutable std::mutex mutex_;
  std::shared_ptr<const StoreSnapshot> snapshot_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

struct ServeOptions {
  std::filesystem::path store;
  std::string host = "127.0.0.1";
  int port = 8080;
};

// Loads and validates the store, then serves until SIGINT or SIGTERM. SIGHUP
// reloads the store; a reload that fails validation keeps the old snapshot.
// Throws ValidationError carrying the report if the store has errors. Startup
// notices and reload messages go to log.
void serve(const ServeOptions& options, std::ostream& log);

}  // namespace oreweave
