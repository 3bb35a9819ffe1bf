#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "oreweave/serialization.hpp"

namespace oreweave::detail {

struct Fetched {
  std::string bytes;
  std::optional<Format> format;  // from Content-Type, when the server sent one we know
};

// GET over http(s) asking for the canonical form first, then RDF/XML.
// Follows redirects. Throws Error with a one-line reason on failure.
Fetched http_get(const std::string& url, std::chrono::seconds timeout);

}  // namespace oreweave::detail
