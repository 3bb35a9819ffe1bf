#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace oreweave {

// Resource Map creation times carry whole seconds, always UTC.
using Timestamp = std::chrono::sys_seconds;

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_timestamp(Timestamp t);
// Accepts only the exact form produced by format_timestamp.
std::optional<Timestamp> parse_timestamp(std::string_view text);
Timestamp now_utc();

// Offset of the first byte that breaks UTF-8 well-formedness, if any.
std::optional<std::size_t> find_invalid_utf8(std::string_view bytes);
// Throws EncodingError at the first invalid byte.
void require_utf8(std::string_view bytes);

// Percent-encodes every byte outside the RFC 3986 unreserved set.
std::string percent_encode(std::string_view text);
// nullopt on a truncated or non-hex escape.
std::optional<std::string> percent_decode(std::string_view text);

}  // namespace oreweave
