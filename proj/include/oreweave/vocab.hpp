#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "oreweave/graph.hpp"

namespace oreweave::vocab {

inline constexpr std::string_view kOreNamespace = "http://www.openarchives.org/ore/terms/";
inline constexpr std::string_view kDctermsNamespace = "http://purl.org/dc/terms/";
inline constexpr std::string_view kRdfNamespace = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kDefaultProjectBase = "http://example.org/oreweave/terms/";

// Fixed vocabulary.
const Uri& describes();
const Uri& aggregates();
const Uri& is_described_by();
const Uri& aggregation_class();  // ore:Aggregation
const Uri& rdf_type();
const Uri& has_version();
const Uri& created();
const Uri& format();
const Uri& has_format();
const Uri& xsd_datetime();

// Terms under the project namespace. The namespace comes from, in order of
// precedence: OREWEAVE_VOCAB_BASE, the `vocab_base` key of a loaded config
// file, the built-in default.
std::string project_base();
Uri has_bibliographic_description();
Uri in_stage();
Uri has_lifecycle_stage();
Uri precedes_stage();
Uri artifact_kind();
Uri source_library();

// Replaces the config-file layer. Throws ValidationError if base is not a URI.
void set_config_base(std::string base);
// Reads a JSON object and applies its "vocab_base" key, if present.
void load_config(const std::filesystem::path& path);
// Drops any config-file override (tests).
void reset_config();

}  // namespace oreweave::vocab
