#include "fetch.hpp"

#include <httplib.h>

#include "oreweave/error.hpp"

namespace oreweave::detail {

Fetched http_get(const std::string& url, std::chrono::seconds timeout) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw Error("not an http URL");
  const std::size_t path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  if (!client.is_valid()) throw Error("unsupported URL " + url);
  client.set_follow_location(true);
  client.set_url_encode(false);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  const httplib::Headers headers{
      {"Accept", std::string(kCanonicalMediaType) + ", " + std::string(kRdfXmlMediaType) + ";q=0.9"}};
  auto res = client.Get(path, headers);
  if (!res) throw Error("request failed: " + httplib::to_string(res.error()));
  if (res->status != 200) throw Error("HTTP status " + std::to_string(res->status));

  Fetched out{std::move(res->body), std::nullopt};
  const std::string type = res->get_header_value("Content-Type");
  const std::string base = type.substr(0, type.find(';'));
  if (base == kCanonicalMediaType) out.format = Format::Canonical;
  else if (base == kRdfXmlMediaType || base == "application/xml" || base == "text/xml")
    out.format = Format::RdfXml;
  return out;
}

}  // namespace oreweave::detail
