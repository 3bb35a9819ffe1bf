#pragma once

// Built-in case studies: a scholarly publication with its versions, and the
// seismology and environmental-science life cycles. All URIs live under
// http://example.org/cens/<fixture>/ and every map is created at
// kFixtureCreated, so fixture output is byte-for-byte reproducible.

#include <string_view>
#include <vector>

#include "oreweave/store.hpp"

namespace oreweave {

inline constexpr std::string_view kFixtureNames[] = {"scholarly-publication", "seismology",
                                                     "environmental"};

// 2009-06-01T00:00:00Z
Timestamp fixture_created();

// http://example.org/cens/<fixture>/<local>
Uri fixture_uri(std::string_view fixture, std::string_view local);

// Throws ValidationError for an unknown name, listing the known ones.
std::vector<ResourceMap> fixture_maps(std::string_view name,
                                      std::optional<Timestamp> created = std::nullopt);
MapStore load_fixture(std::string_view name, std::optional<Timestamp> created = std::nullopt);

}  // namespace oreweave
