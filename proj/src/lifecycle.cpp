#include "oreweave/lifecycle.hpp"

#include <mutex>
#include <sstream>

#include "oreweave/error.hpp"
#include "oreweave/store.hpp"
#include "oreweave/vocab.hpp"

namespace oreweave {

int ordinal(LifecycleStage stage) { return static_cast<int>(stage); }

std::string_view stage_id(LifecycleStage stage) {
  switch (stage) {
    case LifecycleStage::DesignCalibration: return "design-calibration";
    case LifecycleStage::CaptureCleaningAnalysis: return "capture-cleaning-analysis";
    case LifecycleStage::PublicationPreservation: return "publication-preservation";
  }
  return "";
}

std::string_view stage_label(LifecycleStage stage) {
  switch (stage) {
    case LifecycleStage::DesignCalibration: return "experiment design and device calibration";
    case LifecycleStage::CaptureCleaningAnalysis: return "data capture, cleaning and analysis";
    case LifecycleStage::PublicationPreservation: return "publication and preservation";
  }
  return "";
}

std::optional<LifecycleStage> stage_from_id(std::string_view id) {
  for (LifecycleStage s : kAllStages)
    if (stage_id(s) == id) return s;
  return std::nullopt;
}

const StageTable& StageTable::builtin() {
  static const StageTable table = [] {
    StageTable t;
    using enum LifecycleStage;
    const std::pair<std::string_view, LifecycleStage> rows[] = {
        {kinds::kDeploymentPlan, DesignCalibration},
        {kinds::kLabNotebook, DesignCalibration},
        {kinds::kCalibrationReport, DesignCalibration},
        {kinds::kRawDataset, CaptureCleaningAnalysis},
        {kinds::kCleanedDataset, CaptureCleaningAnalysis},
        {kinds::kAnalysisOutput, CaptureCleaningAnalysis},
        {kinds::kContextRecord, CaptureCleaningAnalysis},
        {kinds::kNetworkHealthRecord, CaptureCleaningAnalysis},
        {kinds::kSoftware, CaptureCleaningAnalysis},
        {kinds::kMedia, CaptureCleaningAnalysis},
        {kinds::kPreprint, PublicationPreservation},
        {kinds::kPublication, PublicationPreservation},
        {kinds::kPublisherMetadata, PublicationPreservation},
        {kinds::kSupplemental, PublicationPreservation},
    };
    for (const auto& [kind, stage] : rows) t.table_.emplace(kind, stage);
    return t;
  }();
  return table;
}

StageTable StageTable::parse(std::string_view tsv) {
  StageTable t;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= tsv.size()) {
    std::size_t nl = tsv.find('\n', start);
    if (nl == std::string_view::npos) nl = tsv.size();
    std::string_view line = tsv.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError("expected kind<TAB>stage", line_no);
    const std::string_view kind = line.substr(0, tab);
    const std::string_view id = line.substr(tab + 1);
    if (kind.empty()) throw ParseError("empty artifact kind", line_no);
    const auto stage = stage_from_id(id);
    if (!stage) throw ParseError("unknown stage '" + std::string(id) + "'", line_no);
    if (!t.table_.emplace(std::string(kind), *stage).second)
      throw ParseError("kind '" + std::string(kind) + "' listed twice", line_no);
  }
  return t;
}

StageTable StageTable::load(const std::filesystem::path& path) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

LifecycleStage StageTable::stage_of(std::string_view kind) const {
  if (auto it = table_.find(kind); it != table_.end()) return it->second;
  std::string valid;
  for (const auto& [k, _] : table_) valid += (valid.empty() ? "" : ", ") + k;
  throw ValidationError("unknown artifact kind '" + std::string(kind) + "'; valid kinds: " + valid);
}

bool StageTable::contains(std::string_view kind) const { return table_.find(kind) != table_.end(); }

std::vector<std::string> StageTable::kinds() const {
  std::vector<std::string> out;
  for (const auto& [k, _] : table_) out.push_back(k);
  return out;
}

std::string StageTable::to_tsv() const {
  std::string out;
  for (const auto& [k, s] : table_) out += k + "\t" + std::string(stage_id(s)) + "\n";
  return out;
}

namespace {
std::mutex g_table_mutex;
std::optional<StageTable> g_active_table;
}  // namespace

const StageTable& active_stage_table() {
  std::lock_guard lock(g_table_mutex);
  return g_active_table ? *g_active_table : StageTable::builtin();
}

void set_active_stage_table(StageTable table) {
  std::lock_guard lock(g_table_mutex);
  g_active_table = std::move(table);
}

LifecycleStage stage_of(std::string_view kind) { return active_stage_table().stage_of(kind); }

StagedArtifact make_artifact(Uri uri, std::string_view kind, std::string source_library,
                             const StageTable& table) {
  const LifecycleStage stage = table.stage_of(kind);
  return StagedArtifact{std::move(uri), std::string(kind), stage, std::move(source_library)};
}

StageAggregation build_stage(LifecycleStage stage, std::span<const StagedArtifact> artifacts,
                             const Uri& aggregation_uri, const Uri& rem_uri,
                             const std::vector<Relationship>& extra,
                             std::optional<Timestamp> created) {
  if (artifacts.empty())
    throw ValidationError("stage " + std::string(stage_id(stage)) + " has no artifacts");
  Aggregation agg(aggregation_uri);
  std::vector<Relationship> statements;
  for (const StagedArtifact& a : artifacts) {
    if (a.stage != stage)
      throw ValidationError("artifact " + a.uri.str() + " (" + a.kind + ") belongs to stage " +
                            std::string(stage_id(a.stage)) + ", not " +
                            std::string(stage_id(stage)));
    agg.add_resource(a.uri);
    statements.push_back(Triple{a.uri, vocab::artifact_kind(), Literal(a.kind)});
    if (!a.source_library.empty())
      statements.push_back(Triple{a.uri, vocab::source_library(), Literal(a.source_library)});
  }
  agg.add_metadata(Triple{aggregation_uri, vocab::in_stage(), Literal(std::string(stage_id(stage)))});
  statements.insert(statements.end(), extra.begin(), extra.end());
  ResourceMap map = describe(agg, rem_uri, statements, created);
  return StageAggregation{std::move(agg), std::move(map)};
}

LifecycleBundle link_lifecycle(std::map<LifecycleStage, StageAggregation> stages,
                               const Uri& total_uri, const Uri& rem_uri,
                               std::optional<Timestamp> created) {
  if (stages.empty()) throw ValidationError("a life cycle needs at least one stage");
  Aggregation total(total_uri);
  std::vector<Relationship> order;
  const Uri* previous = nullptr;
  // std::map iterates stages in ordinal order.
  for (const auto& [stage, part] : stages) {
    total = nest(total, part.aggregation);
    if (previous) order.push_back(Triple{*previous, vocab::precedes_stage(), part.aggregation.uri()});
    previous = &part.aggregation.uri();
  }
  ResourceMap map = describe(total, rem_uri, order, created);
  return LifecycleBundle{std::move(stages), std::move(total), std::move(map)};
}

}  // namespace oreweave
