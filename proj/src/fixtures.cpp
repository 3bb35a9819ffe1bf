#include "oreweave/fixtures.hpp"

#include "oreweave/error.hpp"
#include "oreweave/lifecycle.hpp"
#include "oreweave/vocab.hpp"

namespace oreweave {

namespace {

constexpr std::string_view kBase = "http://example.org/cens/";

// Source libraries.
constexpr std::string_view kDeploymentCenter = "CENS Deployment Center";
constexpr std::string_view kEscholarship = "CENS eScholarship Repository";
constexpr std::string_view kObservatoryLibrary = "SNSJHO digital library";

class Builder {
 public:
  Builder(std::string_view fixture, Timestamp created) : fixture_(fixture), created_(created) {}

  Uri uri(std::string_view local) const { return fixture_uri(fixture_, local); }

  StagedArtifact artifact(std::string_view local, std::string_view kind,
                          std::string_view library) const {
    return make_artifact(uri(local), kind, std::string(library), StageTable::builtin());
  }

  Triple format(std::string_view local, std::string_view media_type) const {
    return Triple{uri(local), vocab::format(), Literal(std::string(media_type))};
  }

  Triple rel(std::string_view s, const Uri& p, std::string_view o) const {
    return Triple{uri(s), p, uri(o)};
  }

  StageAggregation stage(LifecycleStage stage, const std::vector<StagedArtifact>& artifacts,
                         std::string_view agg, std::string_view rem,
                         const std::vector<Relationship>& extra = {}) const {
    return build_stage(stage, artifacts, uri(agg), uri(rem), extra, created_);
  }

  // Adds child under parent and rebuilds parent's map with the same statements.
  StageAggregation with_nested(const StageAggregation& parent, const Aggregation& child) const {
    Aggregation agg = nest(parent.aggregation, child);
    ResourceMap map = describe(agg, parent.map.uri(), relationships_of(parent.map), created_);
    return StageAggregation{std::move(agg), std::move(map)};
  }

  Timestamp created() const { return created_; }

 private:
  std::string_view fixture_;
  Timestamp created_;
};

std::vector<ResourceMap> scholarly_publication(Timestamp created) {
  const Builder b("scholarly-publication", created);
  const Aggregation agg = new_aggregation(
      b.uri("A"), {b.uri("manuscript"), b.uri("revision"), b.uri("preprint"),
                   b.uri("publication"), b.uri("publisher-metadata"), b.uri("additional-material")});
  std::vector<Relationship> extra = assert_version_chain(
      {b.uri("manuscript"), b.uri("revision"), b.uri("preprint"), b.uri("publication")});
  extra.push_back(b.rel("publication", vocab::has_bibliographic_description(), "publisher-metadata"));
  return {describe(agg, b.uri("ReM"), extra, created)};
}

std::vector<ResourceMap> seismology(Timestamp created) {
  const Builder b("seismology", created);
  using enum LifecycleStage;

  const StageAggregation planning = b.stage(
      DesignCalibration,
      {b.artifact("deployment-plan", kinds::kDeploymentPlan, kDeploymentCenter),
       b.artifact("topographic-maps", kinds::kDeploymentPlan, kDeploymentCenter),
       b.artifact("permission-letters", kinds::kDeploymentPlan, kDeploymentCenter),
       b.artifact("payment-agreements", kinds::kDeploymentPlan, kDeploymentCenter),
       b.artifact("site-documentation", kinds::kDeploymentPlan, kDeploymentCenter)},
      "A-1", "ReM-1");

  // The seismic data in both of its formats: Mini-SEED as recorded, SAC after
  // conversion at UCLA.
  const StageAggregation seismic_data = b.stage(
      CaptureCleaningAnalysis,
      {b.artifact("mini-seed-dataset", kinds::kRawDataset, "UCLA local database"),
       b.artifact("sac-dataset", kinds::kRawDataset, "Caltech archive")},
      "AR-2", "ReM-AR-2",
      {b.format("mini-seed-dataset", "application/vnd.fdsn.mseed"),
       b.format("sac-dataset", "application/x-sac"),
       b.rel("mini-seed-dataset", vocab::has_format(), "sac-dataset")});

  const StageAggregation collection = b.with_nested(
      b.stage(CaptureCleaningAnalysis,
              {b.artifact("context-data", kinds::kContextRecord, kDeploymentCenter),
               b.artifact("network-health", kinds::kNetworkHealthRecord, "project database")},
              "A-2", "ReM-2"),
      seismic_data.aggregation);

  // Two technical papers exist as preprint and published copy; the third is a
  // technical report held only by the institutional repository.
  const StageAggregation publication = b.stage(
      PublicationPreservation,
      {b.artifact("lukac-2006-preprint", kinds::kPreprint, kEscholarship),
       b.artifact("lukac-2006-publication", kinds::kPublication, "publisher website"),
       b.artifact("husker-2008-preprint", kinds::kPreprint, kEscholarship),
       b.artifact("husker-2008-publication", kinds::kPublication, "publisher website"),
       b.artifact("lukac-2007-technical-report", kinds::kPublication, kEscholarship)},
      "A-3", "ReM-3",
      {b.rel("lukac-2006-preprint", vocab::has_version(), "lukac-2006-publication"),
       b.rel("husker-2008-preprint", vocab::has_version(), "husker-2008-publication")});

  std::vector<ResourceMap> maps{planning.map, collection.map, seismic_data.map, publication.map};
  LifecycleBundle bundle = link_lifecycle(
      {{DesignCalibration, planning}, {CaptureCleaningAnalysis, collection},
       {PublicationPreservation, publication}},
      b.uri("A-t"), b.uri("ReM-t"), created);
  maps.push_back(std::move(bundle.total_map));
  return maps;
}

std::vector<ResourceMap> environmental(Timestamp created) {
  const Builder b("environmental", created);
  using enum LifecycleStage;

  // Four records split between the observatory's digital library and the
  // deployment center.
  const StageAggregation design = b.stage(
      DesignCalibration,
      {b.artifact("nims-calibration-report", kinds::kCalibrationReport, kObservatoryLibrary),
       b.artifact("field-work-setup", kinds::kDeploymentPlan, kObservatoryLibrary),
       b.artifact("equipment-list", kinds::kDeploymentPlan, kDeploymentCenter),
       b.artifact("team-roster", kinds::kDeploymentPlan, kDeploymentCenter)},
      "A-1", "ReM-1");

  const StageAggregation capture = b.stage(
      CaptureCleaningAnalysis,
      {b.artifact("contaminant-data.txt", kinds::kRawDataset, kObservatoryLibrary),
       b.artifact("contaminant-data.csv", kinds::kRawDataset, kObservatoryLibrary),
       b.artifact("contaminant-data.kml", kinds::kRawDataset, kObservatoryLibrary),
       b.artifact("weather-station-record", kinds::kRawDataset, kObservatoryLibrary),
       b.artifact("bathymetry-record", kinds::kRawDataset, kObservatoryLibrary),
       b.artifact("site-media", kinds::kMedia, kObservatoryLibrary),
       b.artifact("analysis-software", kinds::kSoftware, kObservatoryLibrary)},
      "A-2", "ReM-2",
      {b.format("contaminant-data.txt", "text/plain"),
       b.format("contaminant-data.csv", "text/csv"),
       b.format("contaminant-data.kml", "application/vnd.google-earth.kml+xml"),
       b.rel("contaminant-data.txt", vocab::has_format(), "contaminant-data.csv"),
       b.rel("contaminant-data.txt", vocab::has_format(), "contaminant-data.kml")});

  const StageAggregation publication = b.stage(
      PublicationPreservation,
      {b.artifact("singh-2008-preprint", kinds::kPreprint, kEscholarship),
       b.artifact("singh-2008-article", kinds::kPublication, "publisher digital library"),
       b.artifact("harmon-2007-preprint", kinds::kPreprint, kEscholarship),
       b.artifact("harmon-2007-article", kinds::kPublication, "publisher digital library")},
      "A-3", "ReM-3",
      {b.rel("singh-2008-preprint", vocab::has_version(), "singh-2008-article"),
       b.rel("harmon-2007-preprint", vocab::has_version(), "harmon-2007-article")});

  std::vector<ResourceMap> maps{design.map, capture.map, publication.map};
  LifecycleBundle bundle = link_lifecycle(
      {{DesignCalibration, design}, {CaptureCleaningAnalysis, capture},
       {PublicationPreservation, publication}},
      b.uri("A-t"), b.uri("ReM-t"), created);
  maps.push_back(std::move(bundle.total_map));
  return maps;
}

}  // namespace

Timestamp fixture_created() { return *parse_timestamp("2009-06-01T00:00:00Z"); }

Uri fixture_uri(std::string_view fixture, std::string_view local) {
  return Uri(std::string(kBase) + std::string(fixture) + "/" + std::string(local));
}

std::vector<ResourceMap> fixture_maps(std::string_view name, std::optional<Timestamp> created) {
  const Timestamp at = created.value_or(fixture_created());
  if (name == "scholarly-publication") return scholarly_publication(at);
  if (name == "seismology") return seismology(at);
  if (name == "environmental") return environmental(at);
  std::string known;
  for (std::string_view n : kFixtureNames) known += (known.empty() ? "" : ", ") + std::string(n);
  throw ValidationError("unknown fixture '" + std::string(name) + "'; known fixtures: " + known);
}

MapStore load_fixture(std::string_view name, std::optional<Timestamp> created) {
  MapStore store;
  for (const ResourceMap& m : fixture_maps(name, created)) store.put(m);
  return store;
}

}  // namespace oreweave
