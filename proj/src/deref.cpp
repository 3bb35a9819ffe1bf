#include "oreweave/deref.hpp"

#include <httplib.h>
#include <signal.h>

#include <algorithm>
#include <cctype>

#include "oreweave/error.hpp"

namespace oreweave {

namespace {

constexpr std::string_view kPlainText = "text/plain";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// q values are at most three decimals; parse as thousandths.
int parse_q(std::string_view v) {
  if (v.empty()) return 1000;
  if (v[0] == '1') return 1000;
  if (v[0] != '0') return 1000;
  int q = 0;
  int scale = 100;
  for (std::size_t i = 2; i < v.size() && i < 5; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(v[i]))) break;
    q += (v[i] - '0') * scale;
    scale /= 10;
  }
  return q;
}

// First supported type the accept list allows, honouring wildcards.
// supported[0] is the default for "*/*" and for an empty list.
std::optional<std::string_view> negotiate(const std::vector<std::string>& accept,
                                          const std::vector<std::string_view>& supported) {
  if (accept.empty()) return supported.front();
  for (const std::string& range : accept) {
    if (range == "*/*") return supported.front();
    if (range.ends_with("/*")) {
      const std::string_view prefix = std::string_view(range).substr(0, range.size() - 1);
      for (std::string_view s : supported)
        if (s.starts_with(prefix)) return s;
      continue;
    }
    for (std::string_view s : supported)
      if (s == range) return s;
  }
  return std::nullopt;
}

DerefResponse text_response(int status, std::string body) {
  return DerefResponse{status, std::string(kPlainText), std::move(body), std::nullopt};
}

DerefResponse not_found(std::string_view path) {
  return text_response(404, "not found: " + std::string(path) + "\n");
}

DerefResponse not_acceptable(const std::vector<std::string_view>& supported) {
  std::string body = "not acceptable; supported media types:";
  for (std::string_view s : supported) body += " " + std::string(s);
  return text_response(406, body + "\n");
}

// "<prefix><id><suffix>" -> decoded id.
std::optional<std::string> take_id(std::string_view path, std::string_view prefix,
                                   std::string_view suffix) {
  if (!path.starts_with(prefix) || !path.ends_with(suffix)) return std::nullopt;
  if (path.size() <= prefix.size() + suffix.size()) return std::nullopt;
  return percent_decode(path.substr(prefix.size(), path.size() - prefix.size() - suffix.size()));
}

}  // namespace

std::vector<std::string> parse_accept(std::string_view header) {
  struct Range {
    std::string type;
    int q;
  };
  std::vector<Range> ranges;
  std::size_t start = 0;
  while (start <= header.size()) {
    std::size_t comma = header.find(',', start);
    if (comma == std::string_view::npos) comma = header.size();
    std::string_view item = header.substr(start, comma - start);
    start = comma + 1;
    const std::size_t semi = item.find(';');
    const std::string type = lower(trim(item.substr(0, semi)));
    if (type.empty() || type.find('/') == std::string::npos) continue;
    int q = 1000;
    std::string_view params = semi == std::string_view::npos ? "" : item.substr(semi + 1);
    while (!params.empty()) {
      const std::size_t next = params.find(';');
      std::string_view param = trim(params.substr(0, next));
      params = next == std::string_view::npos ? "" : params.substr(next + 1);
      if (param.starts_with("q=") || param.starts_with("Q=")) q = parse_q(param.substr(2));
    }
    if (q > 0) ranges.push_back({type, q});
  }
  std::stable_sort(ranges.begin(), ranges.end(),
                   [](const Range& a, const Range& b) { return a.q > b.q; });
  std::vector<std::string> out;
  for (Range& r : ranges) out.push_back(std::move(r.type));
  return out;
}

DerefRequest DerefRequest::from_header(std::string path, std::string_view accept_header) {
  return DerefRequest{std::move(path), parse_accept(accept_header)};
}

std::string aggregation_path(const Uri& agg_uri) { return "/agg/" + percent_encode(agg_uri.str()); }

std::string rem_path(const Uri& rem_uri, Format format) {
  return "/rem/" + percent_encode(rem_uri.str()) + std::string(extension(format));
}

std::string splash_path(const Uri& agg_uri) {
  return "/splash/" + percent_encode(agg_uri.str()) + ".html";
}

StoreSnapshot::StoreSnapshot(const MapStore& store) {
  const std::vector<ResourceMap> maps = store.maps();
  for (const auto& [rem_uri, entry] : store.index()) {
    Documents docs;
    docs.canonical = store.canonical_bytes(rem_uri);
    if (entry.format == Format::RdfXml && entry.path)
      docs.rdfxml = read_file(*entry.path);
    else
      docs.rdfxml = serialize_rdfxml(entry.map);
    by_rem_.emplace(rem_uri.str(), std::move(docs));
    // Maps are visited in ReM order, so the lowest ReM wins for an aggregation.
    const std::string agg = entry.map.describes().str();
    if (rem_of_aggregation_.emplace(agg, rem_uri).second)
      splash_.emplace(agg, render_splash(aggregation_of(entry.map), maps));
  }
}

DerefResponse StoreSnapshot::resolve(const DerefRequest& req) const {
  static const std::vector<std::string_view> kAggregationTypes{kCanonicalMediaType,
                                                               kRdfXmlMediaType, kHtmlMediaType};
  const std::string_view path = std::string_view(req.path).substr(0, req.path.find('?'));

  if (auto id = take_id(path, "/agg/", "")) {
    auto it = rem_of_aggregation_.find(*id);
    if (it == rem_of_aggregation_.end()) return not_found(path);
    const auto chosen = negotiate(req.accept, kAggregationTypes);
    if (!chosen) return not_acceptable(kAggregationTypes);
    std::string location;
    if (*chosen == kHtmlMediaType)
      location = splash_path(Uri(*id));
    else
      location = rem_path(it->second, *chosen == kRdfXmlMediaType ? Format::RdfXml : Format::Canonical);
    return DerefResponse{303, "", "", std::move(location)};
  }

  for (Format f : {Format::Canonical, Format::RdfXml}) {
    auto id = take_id(path, "/rem/", extension(f));
    if (!id) continue;
    auto it = by_rem_.find(*id);
    if (it == by_rem_.end()) return not_found(path);
    const std::vector<std::string_view> types{media_type(f)};
    if (!negotiate(req.accept, types)) return not_acceptable(types);
    return DerefResponse{200, std::string(media_type(f)),
                         f == Format::Canonical ? it->second.canonical : it->second.rdfxml,
                         std::nullopt};
  }

  if (auto id = take_id(path, "/splash/", ".html")) {
    auto it = splash_.find(*id);
    if (it == splash_.end()) return not_found(path);
    const std::vector<std::string_view> types{kHtmlMediaType};
    if (!negotiate(req.accept, types)) return not_acceptable(types);
    return DerefResponse{200, std::string(kHtmlMediaType), it->second, std::nullopt};
  }

  return not_found(path);
}

DerefResponse resolve(const MapStore& store, const DerefRequest& req) {
  return StoreSnapshot(store).resolve(req);
}

DerefServer::DerefServer(std::shared_ptr<const StoreSnapshot> snapshot)
    : snapshot_(std::move(snapshot)) {}

DerefServer::~DerefServer() { stop(); }

std::shared_ptr<const StoreSnapshot> DerefServer::snapshot() const {
  std::lock_guard lock(mutex_);
  return snapshot_;
}

void DerefServer::reload(std::shared_ptr<const StoreSnapshot> snapshot) {
  std::lock_guard lock(mutex_);
  snapshot_ = std::move(snapshot);
}

int DerefServer::start(const std::string& host, int port) {
  if (server_) throw Error("server already started");
  auto server = std::make_unique<httplib::Server>();
  // The library default allows port sharing; a busy port must be an error.
  server->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });

  server->Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
    const std::shared_ptr<const StoreSnapshot> snap = snapshot();
    const std::string target = req.target.substr(0, req.target.find('?'));
    const DerefResponse out =
        snap->resolve(DerefRequest::from_header(target, req.get_header_value("Accept")));
    res.status = out.status;
    res.set_header("Vary", "Accept");
    if (out.location) res.set_header("Location", *out.location);
    if (!out.content_type.empty()) res.set_content(out.body, out.content_type);
  });
  const auto reject = [](const httplib::Request&, httplib::Response& res) {
    res.status = 405;
    res.set_header("Allow", "GET, HEAD");
    res.set_content("method not allowed\n", std::string(kPlainText));
  };
  server->Post(".*", reject);
  server->Put(".*", reject);
  server->Patch(".*", reject);
  server->Delete(".*", reject);

  int bound = port;
  if (port == 0) {
    bound = server->bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind " + host + " on any port");
  } else if (!server->bind_to_port(host, port)) {
    throw Error("cannot bind " + host + ":" + std::to_string(port) + " (port busy?)");
  }
  port_ = bound;
  server_ = std::move(server);
  thread_ = std::thread([s = server_.get()] { s->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void DerefServer::stop() {
  if (!server_) return;
  server_->stop();
  if (thread_.joinable()) thread_.join();
  server_.reset();
}

void serve(const ServeOptions& options, std::ostream& log) {
  auto load = [&] {
    MapStore store = MapStore::open(options.store);
    ValidationReport report = validate(store);
    if (!report.ok()) throw ValidationError("store has validation errors\n" + report.to_text());
    if (!report.warnings.empty()) log << "notice: serving with warnings\n" << report.to_text();
    return std::make_shared<const StoreSnapshot>(store);
  };

  DerefServer server(load());

  // Signals are taken synchronously here; the server threads inherit the mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  sigaddset(&signals, SIGHUP);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &signals, &previous);

  try {
    const int port = server.start(options.host, options.port);
    log << "listening on http://" << options.host << ":" << port << "/" << std::endl;
  } catch (...) {
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    throw;
  }

  for (;;) {
    int sig = 0;
    if (sigwait(&signals, &sig) != 0) continue;
    if (sig != SIGHUP) break;
    try {
      auto fresh = load();
      const std::size_t maps = fresh->size();
      server.reload(std::move(fresh));
      log << "reloaded " << maps << " maps" << std::endl;
    } catch (const std::exception& e) {
      log << "reload failed, keeping previous store: " << e.what() << std::endl;
    }
  }
  server.stop();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  log << "stopped" << std::endl;
}

}  // namespace oreweave
