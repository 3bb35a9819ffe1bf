#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "oreweave/cli.hpp"
#include "oreweave/deref.hpp"
#include "oreweave/error.hpp"
#include "oreweave/fixtures.hpp"
#include "oreweave/harvest.hpp"
#include "oreweave/serialization.hpp"
#include "oreweave/store.hpp"

namespace py = pybind11;
using namespace oreweave;

namespace {

// Triples cross the boundary as (subject, predicate, object) where object is
// a URI string or the literal in canonical notation.
py::tuple triple_tuple(const Triple& t) {
  return py::make_tuple(t.subject.str(), t.predicate.str(), t.object.to_string());
}

py::list triples(const Graph& g) {
  py::list out;
  for (const Triple& t : g) out.append(triple_tuple(t));
  return out;
}

std::vector<std::string> strings(const std::vector<Uri>& uris) {
  std::vector<std::string> out;
  for (const Uri& u : uris) out.push_back(u.str());
  return out;
}

py::dict diagnostic(const Diagnostic& d) {
  py::dict out;
  out["code"] = std::string(to_string(d.code));
  out["subject"] = d.subject.str();
  out["message"] = d.message;
  return out;
}

py::dict report_dict(const ValidationReport& r) {
  py::list errors, warnings;
  for (const Diagnostic& d : r.errors) errors.append(diagnostic(d));
  for (const Diagnostic& d : r.warnings) warnings.append(diagnostic(d));
  py::dict out;
  out["errors"] = errors;
  out["warnings"] = warnings;
  out["text"] = r.to_text();
  return out;
}

Format format_named(const std::string& name) {
  if (name == "canonical") return Format::Canonical;
  if (name == "rdfxml") return Format::RdfXml;
  throw ValidationError("unknown format '" + name + "' (expected canonical or rdfxml)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Resource Map authoring, validation, harvesting and publishing";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<EncodingError>(m, "EncodingError", base);
  py::register_exception<StructuralError>(m, "StructuralError", base);
  py::register_exception<ConflictError>(m, "ConflictError", base);

  py::class_<ResourceMap>(m, "ResourceMap")
      .def_property_readonly("uri", [](const ResourceMap& r) { return r.uri().str(); })
      .def_property_readonly("describes", [](const ResourceMap& r) { return r.describes().str(); })
      .def_property_readonly("created", [](const ResourceMap& r) { return format_timestamp(r.created()); })
      .def_property_readonly("resources", [](const ResourceMap& r) { return strings(r.resources()); })
      .def_property_readonly("statements", [](const ResourceMap& r) { return triples(r.statements()); })
      .def("to_canonical", &serialize_canonical)
      .def("to_rdfxml", &serialize_rdfxml)
      .def("__eq__", [](const ResourceMap& a, const ResourceMap& b) { return a == b; })
      .def("__len__", [](const ResourceMap& r) { return r.statements().size(); })
      .def("__repr__", [](const ResourceMap& r) {
        return "<ResourceMap " + r.uri().str() + " describes " + r.describes().str() + ">";
      });

  m.def("parse", [](const std::string& bytes, const std::string& format) { return parse(bytes, format_named(format)); },
        py::arg("data"), py::arg("format") = "canonical");
  m.def("sniff_format", [](const std::string& bytes) {
    return std::string(sniff_format(bytes) == Format::Canonical ? "canonical" : "rdfxml");
  });

  m.def("fixture_names", [] { return std::vector<std::string>(std::begin(kFixtureNames), std::end(kFixtureNames)); });
  m.def("fixture", [](const std::string& name) { return fixture_maps(name); }, py::arg("name"));

  m.def("validate", [](const std::vector<ResourceMap>& maps) { return report_dict(validate(maps)); }, py::arg("maps"));

  py::class_<MapStore>(m, "MapStore")
      .def(py::init(&MapStore::open), py::arg("root"))
      .def("maps", &MapStore::maps)
      .def("put", &MapStore::put, py::arg("map"))
      .def("get", [](const MapStore& s, const std::string& uri) { return s.get(Uri(uri)); }, py::arg("rem_uri"))
      .def("validate", [](const MapStore& s) { return report_dict(validate(s)); })
      .def("resolve",
           [](const MapStore& s, const std::string& path, const std::string& accept) {
             const DerefResponse r = resolve(s, DerefRequest::from_header(path, accept));
             py::dict out;
             out["status"] = r.status;
             out["content_type"] = r.content_type;
             out["body"] = py::bytes(r.body);
             out["location"] = r.location ? py::object(py::str(*r.location)) : py::object(py::none());
             return out;
           },
           py::arg("path"), py::arg("accept") = "")
      .def("__len__", &MapStore::size);

  m.def("aggregation_path", [](const std::string& uri) { return aggregation_path(Uri(uri)); });

  py::class_<UnionGraph>(m, "UnionGraph")
      .def_property_readonly("triples", [](const UnionGraph& u) { return triples(u.graph()); })
      .def("__len__", [](const UnionGraph& u) { return u.graph().size(); })
      .def("co_referenced", [](const UnionGraph& u) {
        std::map<std::string, std::vector<std::string>> out;
        for (const auto& [uri, rems] : co_referenced(u))
          out[uri.str()] = strings(std::vector<Uri>(rems.begin(), rems.end()));
        return out;
      })
      .def("trace",
           [](const UnionGraph& u, const std::string& entry, std::optional<std::size_t> max_depth) {
             const TraceResult r = trace(u, Uri(entry), max_depth);
             py::dict out;
             out["nodes"] = strings(std::vector<Uri>(r.nodes.begin(), r.nodes.end()));
             out["subgraph"] = triples(r.subgraph);
             out["text"] = r.to_text();
             return out;
           },
           py::arg("entry"), py::arg("max_depth") = std::nullopt);

  m.def("union_of", [](const std::vector<ResourceMap>& maps) { return union_of(maps); }, py::arg("maps"));

  m.def("harvest",
        [](const std::vector<std::string>& sources, int timeout, bool concurrent) {
          HarvestResult r;
          {
            py::gil_scoped_release release;
            r = harvest(sources, HarvestOptions{std::chrono::seconds(timeout), concurrent});
          }
          py::dict out;
          out["graph"] = r.graph;
          out["maps"] = r.maps();
          out["report"] = r.report();
          out["ok"] = std::all_of(r.outcomes.begin(), r.outcomes.end(), [](const SourceOutcome& o) { return o.ok; });
          return out;
        },
        py::arg("sources"), py::arg("timeout") = 10, py::arg("concurrent") = true);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
