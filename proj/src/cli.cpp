#include "oreweave/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>

#include "oreweave/deref.hpp"
#include "oreweave/error.hpp"
#include "oreweave/fixtures.hpp"
#include "oreweave/harvest.hpp"
#include "oreweave/lifecycle.hpp"
#include "oreweave/store.hpp"
#include "oreweave/vocab.hpp"

namespace oreweave::cli {

namespace fs = std::filesystem;

namespace {

// Raised for bad arguments that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Uri uri_arg(const std::string& text, std::string_view what) {
  auto u = Uri::parse(text);
  if (!u) throw UsageError(std::string(what) + " is not an absolute URI: '" + text + "'");
  return *u;
}

std::vector<Uri> uri_args(const std::vector<std::string>& texts, std::string_view what) {
  std::vector<Uri> out;
  for (const std::string& t : texts) out.push_back(uri_arg(t, what));
  return out;
}

MapStore open_existing(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error("no store at " + dir);
  return MapStore::open(dir);
}

const ResourceMap& map_for_aggregation(const MapStore& store, const Uri& agg) {
  const ResourceMap* m = store.find_by_aggregation(agg);
  if (!m) throw Error("no Resource Map describes " + agg.str());
  return *m;
}

void print_warnings(const std::vector<Diagnostic>& warnings, std::ostream& err) {
  for (const Diagnostic& d : warnings)
    err << "warning: " << to_string(d.code) << " " << d.subject.str() << ": " << d.message << "\n";
}

struct KindOptions {
  std::string kind;
  std::string library;

  // artifactKind / sourceLibrary statements for each resource.
  std::vector<Relationship> statements(const std::vector<Uri>& resources) const {
    std::vector<Relationship> out;
    if (!kind.empty()) stage_of(kind);  // rejects unknown kinds
    for (const Uri& r : resources) {
      if (!kind.empty()) out.push_back(Triple{r, vocab::artifact_kind(), Literal(kind)});
      if (!library.empty()) out.push_back(Triple{r, vocab::source_library(), Literal(library)});
    }
    return out;
  }
};

void add_kind_options(CLI::App* cmd, KindOptions& k) {
  cmd->add_option("--kind", k.kind, "Artifact kind recorded for each resource");
  cmd->add_option("--library", k.library, "Source library recorded for each resource");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Author, publish and harvest OAI-ORE Resource Maps", "oreweave"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");

  std::string config_path;
  std::string stages_path;
  std::string created_text;
  app.add_option("--config", config_path, "JSON config file (key: vocab_base)");
  app.add_option("--stages", stages_path, "TSV table mapping artifact kinds to stages");
  app.add_option("--created", created_text, "Creation time for new maps, YYYY-MM-DDTHH:MM:SSZ");

  std::string dir;
  std::string out_dir;
  std::string rem_text;
  std::string agg_text;
  std::vector<std::string> uris;
  KindOptions kind;

  auto* cmd_new = app.add_subcommand("new", "Create an aggregation and its Resource Map");
  cmd_new->add_option("aggregation", agg_text, "Aggregation URI")->required();
  cmd_new->add_option("resources", uris, "Aggregated resource URIs")->required();
  cmd_new->add_option("--rem", rem_text, "Resource Map URI")->required();
  cmd_new->add_option("--out", out_dir, "Store directory")->required();
  add_kind_options(cmd_new, kind);

  auto* cmd_add = app.add_subcommand("add", "Aggregate more resources");
  cmd_add->add_option("store", dir, "Store directory")->required();
  cmd_add->add_option("aggregation", agg_text, "Aggregation URI")->required();
  cmd_add->add_option("resources", uris, "Resource URIs")->required();
  add_kind_options(cmd_add, kind);

  std::string subject_text, predicate_text, object_text, lang, datatype;
  bool force_literal = false;
  auto* cmd_relate = app.add_subcommand("relate", "Assert a relationship in a Resource Map");
  cmd_relate->add_option("store", dir, "Store directory")->required();
  cmd_relate->add_option("subject", subject_text)->required();
  cmd_relate->add_option("predicate", predicate_text)->required();
  cmd_relate->add_option("object", object_text, "URI, or literal text")->required();
  cmd_relate->add_option("--rem", rem_text, "Map to add to (default: the map aggregating the subject)");
  cmd_relate->add_flag("--literal", force_literal, "Treat the object as a literal");
  cmd_relate->add_option("--lang", lang, "Language tag of a literal object");
  cmd_relate->add_option("--datatype", datatype, "Datatype URI of a literal object");

  std::string child_text;
  auto* cmd_nest = app.add_subcommand("nest", "Aggregate one aggregation inside another");
  cmd_nest->add_option("store", dir, "Store directory")->required();
  cmd_nest->add_option("parent", agg_text, "Parent aggregation URI")->required();
  cmd_nest->add_option("child", child_text, "Child aggregation URI")->required();

  auto* cmd_validate = app.add_subcommand("validate", "Check the maps in a store");
  cmd_validate->add_option("store", dir, "Store directory")->required();

  std::string file;
  auto* cmd_export = app.add_subcommand("export", "Write one map to a .remc or .rdf file");
  cmd_export->add_option("store", dir, "Store directory")->required();
  cmd_export->add_option("rem", rem_text, "Resource Map URI")->required();
  cmd_export->add_option("file", file, "Output file, or - for canonical form on stdout")->required();

  auto* cmd_import = app.add_subcommand("import", "Add a .remc or .rdf file to a store");
  cmd_import->add_option("store", dir, "Store directory")->required();
  cmd_import->add_option("file", file, "Input file")->required();

  std::string fixture_name;
  auto* cmd_fixture = app.add_subcommand("fixture", "Write a built-in case study to a store");
  cmd_fixture->add_option("name", fixture_name, "Fixture name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kFixtureNames), std::end(kFixtureNames))));
  cmd_fixture->add_option("--out", out_dir, "Store directory")->required();

  int timeout = 10;
  bool sequential = false;
  auto* cmd_harvest = app.add_subcommand("harvest", "Fetch Resource Maps into a store");
  cmd_harvest->add_option("sources", uris, "http(s) URLs, file:// URLs, files or directories")->required();
  cmd_harvest->add_option("--out", out_dir, "Store directory")->required();
  cmd_harvest->add_option("--timeout", timeout, "Per-source timeout in seconds")->check(CLI::PositiveNumber);
  cmd_harvest->add_flag("--sequential", sequential, "Fetch one source at a time");

  std::optional<std::size_t> max_depth;
  bool print_graph = false;
  auto* cmd_trace = app.add_subcommand("trace", "Follow relationships from one URI across all maps");
  cmd_trace->add_option("store", dir, "Store directory")->required();
  cmd_trace->add_option("uri", subject_text, "Entry URI")->required();
  cmd_trace->add_option("--max-depth", max_depth, "Stop after this many hops");
  cmd_trace->add_flag("--graph", print_graph, "Print the reached subgraph instead of paths");

  auto* cmd_coref = app.add_subcommand("coref", "List URIs mentioned by more than one map");
  cmd_coref->add_option("store", dir, "Store directory")->required();

  ServeOptions serve_options;
  std::string store_text;
  auto* cmd_serve = app.add_subcommand("serve", "Publish a store over HTTP");
  cmd_serve->add_option("--store", store_text, "Store directory")->required();
  cmd_serve->add_option("--host", serve_options.host, "Address to bind");
  cmd_serve->add_option("--port", serve_options.port, "Port (0 picks a free one)")
      ->check(CLI::Range(0, 65535));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!config_path.empty()) vocab::load_config(config_path);
    if (!stages_path.empty()) set_active_stage_table(StageTable::load(stages_path));
    std::optional<Timestamp> created;
    if (!created_text.empty()) {
      created = parse_timestamp(created_text);
      if (!created) throw UsageError("--created expects YYYY-MM-DDTHH:MM:SSZ, got '" + created_text + "'");
    }
    const Timestamp now = created.value_or(now_utc());

    if (*cmd_new) {
      const Uri agg_uri = uri_arg(agg_text, "aggregation");
      const Uri rem_uri = uri_arg(rem_text, "--rem");
      const std::vector<Uri> resources = uri_args(uris, "resource");
      MapStore store = MapStore::open(out_dir);
      const Aggregation agg = new_aggregation(agg_uri, resources);
      store.put(describe(agg, rem_uri, kind.statements(resources), now));
      out << (fs::path(out_dir) / store_file_name(rem_uri)).string() << "\n";
      return kExitOk;
    }

    if (*cmd_add) {
      MapStore store = open_existing(dir);
      const ResourceMap& rem = map_for_aggregation(store, uri_arg(agg_text, "aggregation"));
      const std::vector<Uri> resources = uri_args(uris, "resource");
      Aggregation agg = aggregation_of(rem);
      for (const Uri& r : resources) agg.add_resource(r);
      std::vector<Relationship> extra = relationships_of(rem);
      for (const Relationship& r : kind.statements(resources)) extra.push_back(r);
      store.put(describe(agg, rem.uri(), extra, rem.created()));
      return kExitOk;
    }

    if (*cmd_relate) {
      MapStore store = open_existing(dir);
      const Uri s = uri_arg(subject_text, "subject");
      const Uri p = uri_arg(predicate_text, "predicate");
      Term o = Literal(object_text);
      if (!force_literal && lang.empty() && datatype.empty()) {
        if (auto u = Uri::parse(object_text)) o = *u;
      } else {
        std::optional<Uri> dt;
        if (!datatype.empty()) dt = uri_arg(datatype, "--datatype");
        std::optional<std::string> tag;
        if (!lang.empty()) tag = lang;
        o = Literal(object_text, dt, tag);
      }

      const ResourceMap* target = nullptr;
      if (!rem_text.empty()) {
        target = store.find(uri_arg(rem_text, "--rem"));
        if (!target) throw Error("no Resource Map " + rem_text + " in " + dir);
      } else {
        std::vector<const ResourceMap*> candidates;
        for (const auto& [_, entry] : store.index()) {
          const Aggregation agg = aggregation_of(entry.map);
          if (agg.uri() == s || agg.contains(s)) candidates.push_back(&entry.map);
        }
        if (candidates.size() != 1)
          throw Error(std::to_string(candidates.size()) + " maps aggregate " + s.str() +
                      "; choose one with --rem");
        target = candidates.front();
      }

      std::vector<Relationship> extra = relationships_of(*target);
      extra.push_back(Triple{s, p, o});
      std::vector<Diagnostic> warnings;
      const ResourceMap updated =
          describe(aggregation_of(*target), target->uri(), extra, target->created(), &warnings);
      store.put(updated);
      print_warnings(warnings, err);
      return kExitOk;
    }

    if (*cmd_nest) {
      MapStore store = open_existing(dir);
      const ResourceMap& parent = map_for_aggregation(store, uri_arg(agg_text, "parent"));
      const Uri child_uri = uri_arg(child_text, "child");
      const ResourceMap* child_map = store.find_by_aggregation(child_uri);
      const Aggregation child = child_map ? aggregation_of(*child_map) : Aggregation(child_uri);
      const Aggregation nested = nest(aggregation_of(parent), child);
      store.put(describe(nested, parent.uri(), relationships_of(parent), parent.created()));
      if (!child_map)
        err << "warning: " << child_uri.str() << " has no Resource Map in " << dir << " yet\n";
      return kExitOk;
    }

    if (*cmd_validate) {
      const ValidationReport report = validate(open_existing(dir));
      out << report.to_text();
      return report.ok() ? kExitOk : kExitFailure;
    }

    if (*cmd_export) {
      const MapStore store = open_existing(dir);
      const Uri rem_uri = uri_arg(rem_text, "rem");
      const ResourceMap* rem = store.find(rem_uri);
      if (!rem) throw Error("no Resource Map " + rem_uri.str() + " in " + dir);
      if (file == "-") {
        out << store.canonical_bytes(rem_uri);
        return kExitOk;
      }
      const auto format = format_from_extension(file);
      if (!format) throw UsageError("cannot tell the format of '" + file + "'; use .remc or .rdf");
      write_file_atomic(file, *format == Format::Canonical ? store.canonical_bytes(rem_uri)
                                                           : serialize(*rem, *format));
      return kExitOk;
    }

    if (*cmd_import) {
      const std::string bytes = read_file(file);
      const Format format = format_from_extension(file).value_or(sniff_format(bytes));
      const ResourceMap rem = parse(bytes, format);
      MapStore store = MapStore::open(dir);
      store.put(rem);
      out << rem.uri().str() << "\n";
      return kExitOk;
    }

    if (*cmd_fixture) {
      MapStore store = MapStore::open(out_dir);
      for (const ResourceMap& m : fixture_maps(fixture_name, created)) store.put(m);
      for (const auto& [uri, entry] : store.index())
        if (entry.path) out << entry.path->string() << "\n";
      return kExitOk;
    }

    if (*cmd_harvest) {
      HarvestOptions options;
      options.timeout = std::chrono::seconds(timeout);
      options.concurrent = !sequential;
      HarvestResult result = harvest(uris, options);
      MapStore store = MapStore::open(out_dir);
      bool failed = false;
      for (SourceOutcome& o : result.outcomes) {
        if (o.map) {
          try {
            store.put(*o.map);
          } catch (const ConflictError& e) {
            o.ok = false;
            o.reason = e.what();
          }
        }
        failed = failed || !o.ok;
      }
      out << result.report();
      return failed ? kExitFailure : kExitOk;
    }

    if (*cmd_trace) {
      const MapStore store = open_existing(dir);
      const std::vector<ResourceMap> maps = store.maps();
      const TraceResult result = trace(union_of(maps), uri_arg(subject_text, "uri"), max_depth);
      out << (print_graph ? serialize_canonical_graph(result.subgraph) : result.to_text());
      return kExitOk;
    }

    if (*cmd_coref) {
      const std::vector<ResourceMap> maps = open_existing(dir).maps();
      for (const auto& [uri, rems] : co_referenced(union_of(maps))) {
        out << uri.str() << "\t" << rems.size() << "\t";
        bool first = true;
        for (const Uri& r : rems) {
          out << (first ? "" : " ") << r.str();
          first = false;
        }
        out << "\n";
      }
      return kExitOk;
    }

    if (*cmd_serve) {
      if (!fs::is_directory(store_text)) throw Error("no store at " + store_text);
      serve_options.store = store_text;
      serve(serve_options, out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace oreweave::cli
