#include "oreweave/vocab.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>

#include <json.hpp>

#include "oreweave/error.hpp"

namespace oreweave::vocab {

namespace {

Uri make(std::string_view ns, std::string_view local) {
  return Uri(std::string(ns) + std::string(local));
}

std::mutex g_config_mutex;
std::optional<std::string> g_config_base;

}  // namespace

const Uri& describes() { static const Uri u = make(kOreNamespace, "describes"); return u; }
const Uri& aggregates() { static const Uri u = make(kOreNamespace, "aggregates"); return u; }
const Uri& is_described_by() { static const Uri u = make(kOreNamespace, "isDescribedBy"); return u; }
const Uri& aggregation_class() { static const Uri u = make(kOreNamespace, "Aggregation"); return u; }
const Uri& rdf_type() { static const Uri u = make(kRdfNamespace, "type"); return u; }
const Uri& has_version() { static const Uri u = make(kDctermsNamespace, "hasVersion"); return u; }
const Uri& created() { static const Uri u = make(kDctermsNamespace, "created"); return u; }
const Uri& format() { static const Uri u = make(kDctermsNamespace, "format"); return u; }
const Uri& has_format() { static const Uri u = make(kDctermsNamespace, "hasFormat"); return u; }
const Uri& xsd_datetime() { static const Uri u = make(kXsdNamespace, "dateTime"); return u; }

std::string project_base() {
  if (const char* env = std::getenv("OREWEAVE_VOCAB_BASE"); env && *env) return env;
  std::lock_guard lock(g_config_mutex);
  if (g_config_base) return *g_config_base;
  return std::string(kDefaultProjectBase);
}

Uri has_bibliographic_description() { return make(project_base(), "hasBibliographicDescription"); }
Uri in_stage() { return make(project_base(), "inStage"); }
Uri has_lifecycle_stage() { return make(project_base(), "hasLifecycleStage"); }
Uri precedes_stage() { return make(project_base(), "precedesStage"); }
Uri artifact_kind() { return make(project_base(), "artifactKind"); }
Uri source_library() { return make(project_base(), "sourceLibrary"); }

void set_config_base(std::string base) {
  if (!Uri::is_valid(base)) throw ValidationError("vocab_base is not an absolute URI: " + base);
  std::lock_guard lock(g_config_mutex);
  g_config_base = std::move(base);
}

void load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    throw Error("config file " + path.string() + ": " + e.what());
  }
  if (!config.is_object()) throw Error("config file " + path.string() + ": expected a JSON object");
  if (auto it = config.find("vocab_base"); it != config.end()) {
    if (!it->is_string()) throw Error("config file " + path.string() + ": vocab_base must be a string");
    set_config_base(it->get<std::string>());
  }
}

void reset_config() {
  std::lock_guard lock(g_config_mutex);
  g_config_base.reset();
}

}  // namespace oreweave::vocab
