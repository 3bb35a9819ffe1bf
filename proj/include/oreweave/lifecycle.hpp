#pragma once

// The integrated scientific life cycle: three condensed stages, the artifact
// kinds produced in each, and builders that turn staged artifacts into linked
// ORE aggregations.

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oreweave/model.hpp"

namespace oreweave {

enum class LifecycleStage {
  DesignCalibration = 1,
  CaptureCleaningAnalysis = 2,
  PublicationPreservation = 3,
};

inline constexpr std::array<LifecycleStage, 3> kAllStages = {
    LifecycleStage::DesignCalibration,
    LifecycleStage::CaptureCleaningAnalysis,
    LifecycleStage::PublicationPreservation,
};

int ordinal(LifecycleStage stage);
// Stable identifier used in data files and inStage literals, e.g. "design-calibration".
std::string_view stage_id(LifecycleStage stage);
// Human-readable label, e.g. "experiment design and device calibration".
std::string_view stage_label(LifecycleStage stage);
std::optional<LifecycleStage> stage_from_id(std::string_view id);

namespace kinds {
inline constexpr std::string_view kDeploymentPlan = "deployment-plan";
inline constexpr std::string_view kLabNotebook = "lab-notebook";
inline constexpr std::string_view kCalibrationReport = "calibration-report";
inline constexpr std::string_view kRawDataset = "raw-dataset";
inline constexpr std::string_view kCleanedDataset = "cleaned-dataset";
inline constexpr std::string_view kAnalysisOutput = "analysis-output";
inline constexpr std::string_view kContextRecord = "context-record";
inline constexpr std::string_view kNetworkHealthRecord = "network-health-record";
inline constexpr std::string_view kPreprint = "preprint";
inline constexpr std::string_view kPublication = "publication";
inline constexpr std::string_view kPublisherMetadata = "publisher-metadata";
inline constexpr std::string_view kSupplemental = "supplemental";
inline constexpr std::string_view kSoftware = "software";
inline constexpr std::string_view kMedia = "media";
}  // namespace kinds

// Artifact kind -> stage. The built-in table covers the kinds above; other
// disciplines can load their own from a "kind<TAB>stage-id" file.
class StageTable {
 public:
  static const StageTable& builtin();
  // Blank lines and lines starting with '#' are skipped. Throws ParseError.
  static StageTable parse(std::string_view tsv);
  static StageTable load(const std::filesystem::path& path);

  // Throws ValidationError listing the valid kinds.
  LifecycleStage stage_of(std::string_view kind) const;
  bool contains(std::string_view kind) const;
  std::vector<std::string> kinds() const;
  std::string to_tsv() const;

 private:
  std::map<std::string, LifecycleStage, std::less<>> table_;
};

// The table consulted when no other is given (the built-in one unless replaced).
const StageTable& active_stage_table();
void set_active_stage_table(StageTable table);

LifecycleStage stage_of(std::string_view kind);

struct StagedArtifact {
  Uri uri;
  std::string kind;
  LifecycleStage stage;
  std::string source_library;  // the archive or library hosting it
};

// Derives the stage from the kind through the table.
StagedArtifact make_artifact(Uri uri, std::string_view kind, std::string source_library,
                             const StageTable& table = active_stage_table());

struct StageAggregation {
  Aggregation aggregation;
  ResourceMap map;
};

// Aggregates the artifacts of one stage. The map records each artifact's kind
// and source library and one inStage statement for the aggregation.
// Throws ValidationError on an empty list or an artifact from another stage.
StageAggregation build_stage(LifecycleStage stage, std::span<const StagedArtifact> artifacts,
                             const Uri& aggregation_uri, const Uri& rem_uri,
                             const std::vector<Relationship>& extra = {},
                             std::optional<Timestamp> created = std::nullopt);

struct LifecycleBundle {
  std::map<LifecycleStage, StageAggregation> stages;
  Aggregation total;
  ResourceMap total_map;
};

// Links the present stages under one aggregation. The total map chains
// consecutive present stages with precedesStage. Stages may be skipped, but at
// least one must be present.
LifecycleBundle link_lifecycle(std::map<LifecycleStage, StageAggregation> stages,
                               const Uri& total_uri, const Uri& rem_uri,
                               std::optional<Timestamp> created = std::nullopt);

}  // namespace oreweave
