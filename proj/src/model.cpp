#include "oreweave/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "oreweave/error.hpp"
#include "oreweave/vocab.hpp"

namespace oreweave {

namespace {

bool is_nested_marker(const Triple& t) {
  return t.predicate == vocab::rdf_type() && t.object.is_uri() &&
         t.object.uri() == vocab::aggregation_class();
}

}  // namespace

bool Aggregation::contains(const Uri& resource) const {
  return std::find(resources_.begin(), resources_.end(), resource) != resources_.end();
}

void Aggregation::add_resource(Uri resource) {
  if (resource == uri_)
    throw ValidationError("aggregation " + uri_.str() + " cannot aggregate itself");
  if (contains(resource))
    throw ValidationError("duplicate resource " + resource.str() + " in aggregation " + uri_.str());
  resources_.push_back(std::move(resource));
}

void Aggregation::add_metadata(Triple t) {
  if (t.subject != uri_)
    throw ValidationError("metadata subject " + t.subject.str() + " is not the aggregation " +
                          uri_.str());
  if (std::find(metadata_.begin(), metadata_.end(), t) == metadata_.end())
    metadata_.push_back(std::move(t));
}

ResourceMap::ResourceMap(Uri uri, Uri describes, Graph statements, Timestamp created)
    : uri_(std::move(uri)),
      describes_(std::move(describes)),
      statements_(std::move(statements)),
      created_(created) {
  if (uri_ == describes_)
    throw StructuralError("Resource Map " + uri_.str() + " cannot describe itself");
  if (!statements_.contains(Triple{uri_, vocab::describes(), describes_}))
    throw StructuralError("Resource Map " + uri_.str() + " lacks its ore:describes triple");
  auto [first, last] = statements_.with_subject_predicate(uri_, vocab::describes());
  if (std::distance(first, last) != 1)
    throw StructuralError("Resource Map " + uri_.str() + " describes more than one aggregation");
  auto [cfirst, clast] = statements_.with_subject_predicate(uri_, vocab::created());
  if (cfirst != clast)
    throw StructuralError("creation time of " + uri_.str() + " must not appear among statements");
}

std::vector<Uri> ResourceMap::resources() const {
  std::vector<Uri> out;
  auto [first, last] = statements_.with_subject_predicate(describes_, vocab::aggregates());
  for (auto it = first; it != last; ++it)
    if (const Uri* r = it->object.as_uri()) out.push_back(*r);
  return out;
}

Triple ResourceMap::created_triple() const {
  return Triple{uri_, vocab::created(),
                Literal(format_timestamp(created_), vocab::xsd_datetime())};
}

Graph ResourceMap::document_graph() const { return insert(statements_, created_triple()); }

ResourceMap ResourceMap::from_document_graph(const Graph& graph) {
  const Graph describes = match(graph, TriplePattern{std::nullopt, vocab::describes(), std::nullopt});
  if (describes.empty()) throw StructuralError("document has no ore:describes triple");
  if (describes.size() > 1)
    throw StructuralError("document has " + std::to_string(describes.size()) +
                          " ore:describes triples; a Resource Map describes exactly one aggregation");
  const Triple& head = *describes.begin();
  const Uri* agg = head.object.as_uri();
  if (!agg) throw StructuralError("ore:describes object must be a URI");
  const Uri& rem = head.subject;

  Graph statements;
  std::optional<Timestamp> created;
  for (const Triple& t : graph) {
    if (t.subject == rem && t.predicate == vocab::created()) {
      if (created) throw StructuralError("more than one creation time for " + rem.str());
      if (!t.object.is_literal()) throw StructuralError("creation time must be a literal");
      const Literal& lit = t.object.literal();
      if (lit.datatype() != vocab::xsd_datetime())
        throw StructuralError("creation time must be typed xsd:dateTime");
      created = parse_timestamp(lit.lexical());
      if (!created) throw StructuralError("malformed creation time '" + lit.lexical() + "'");
      continue;
    }
    statements.add(t);
  }
  if (!created) throw StructuralError("document has no creation time for " + rem.str());
  return ResourceMap(rem, *agg, std::move(statements), *created);
}

Aggregation new_aggregation(Uri uri, const std::vector<Uri>& resources) {
  Aggregation agg(std::move(uri));
  for (const Uri& r : resources) agg.add_resource(r);
  return agg;
}

Aggregation nest(const Aggregation& parent, const Aggregation& child) {
  if (child.uri() == parent.uri())
    throw ValidationError("aggregation " + parent.uri().str() + " cannot nest itself");
  if (parent.contains(child.uri()))
    throw ValidationError(child.uri().str() + " is already aggregated by " + parent.uri().str());
  Aggregation out = parent;
  out.add_resource(child.uri());
  out.nested_.insert(child.uri());
  return out;
}

std::vector<Relationship> assert_version_chain(const std::vector<Uri>& versions) {
  if (versions.size() < 2)
    throw ValidationError("a version chain needs at least two versions");
  std::set<Uri> distinct(versions.begin(), versions.end());
  if (distinct.size() != versions.size())
    throw ValidationError("a version chain cannot repeat a version");
  std::vector<Relationship> out;
  out.reserve(versions.size() - 1);
  for (std::size_t i = 0; i + 1 < versions.size(); ++i)
    out.push_back(Triple{versions[i], vocab::has_version(), versions[i + 1]});
  return out;
}

std::string_view to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::E1: return "E1";
    case DiagnosticCode::E2: return "E2";
    case DiagnosticCode::E3: return "E3";
    case DiagnosticCode::W1: return "W1";
    case DiagnosticCode::W2: return "W2";
  }
  return "??";
}

ResourceMap describe(const Aggregation& agg, const Uri& rem_uri,
                     const std::vector<Relationship>& extra, std::optional<Timestamp> created,
                     std::vector<Diagnostic>* warnings) {
  if (rem_uri == agg.uri())
    throw ValidationError("Resource Map URI must differ from the aggregation URI " +
                          agg.uri().str());
  Graph statements;
  statements.add(Triple{rem_uri, vocab::describes(), agg.uri()});
  for (const Uri& r : agg.resources()) statements.add(Triple{agg.uri(), vocab::aggregates(), r});
  for (const Uri& n : agg.nested()) statements.add(Triple{n, vocab::rdf_type(), vocab::aggregation_class()});
  for (const Triple& t : agg.metadata()) statements.add(t);

  auto known = [&](const Uri& u) { return u == agg.uri() || u == rem_uri || agg.contains(u); };
  for (const Relationship& r : extra) {
    if (r.subject == rem_uri && (r.predicate == vocab::created() || r.predicate == vocab::describes()))
      throw ValidationError("relationship " + r.predicate.str() +
                            " on the Resource Map itself is reserved");
    if (warnings) {
      const Uri* obj = r.object.as_uri();
      if (!known(r.subject)) {
        warnings->push_back({DiagnosticCode::W2,
                             "relationship subject is outside aggregation " + agg.uri().str(),
                             r.subject});
      } else if (obj && !known(*obj)) {
        warnings->push_back({DiagnosticCode::W2,
                             "relationship object is outside aggregation " + agg.uri().str(), *obj});
      }
    }
    statements.add(r);
  }
  return ResourceMap(rem_uri, agg.uri(), std::move(statements), created.value_or(now_utc()));
}

Aggregation aggregation_of(const ResourceMap& rem) {
  Aggregation agg(rem.describes());
  for (Uri& r : rem.resources()) agg.add_resource(std::move(r));
  for (const Uri& r : agg.resources()) {
    if (rem.statements().contains(Triple{r, vocab::rdf_type(), vocab::aggregation_class()}))
      agg.nested_.insert(r);
  }
  auto [first, last] = rem.statements().with_subject(rem.describes());
  for (auto it = first; it != last; ++it)
    if (it->predicate != vocab::aggregates()) agg.metadata_.push_back(*it);
  return agg;
}

std::vector<Relationship> relationships_of(const ResourceMap& rem) {
  std::vector<Relationship> out;
  for (const Triple& t : rem.statements()) {
    if (t.subject == rem.uri() && t.predicate == vocab::describes()) continue;
    if (t.subject == rem.describes()) continue;
    if (is_nested_marker(t) &&
        rem.statements().contains(Triple{rem.describes(), vocab::aggregates(), t.subject}))
      continue;
    out.push_back(t);
  }
  return out;
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto* list : {&errors, &warnings})
    for (const Diagnostic& d : *list)
      out << to_string(d.code) << ' ' << d.subject.str() << ' ' << d.message << '\n';
  out << errors.size() << (errors.size() == 1 ? " error, " : " errors, ") << warnings.size()
      << (warnings.size() == 1 ? " warning\n" : " warnings\n");
  return out.str();
}

namespace {

// Tarjan's algorithm; returns components of size > 1 plus self-loops.
std::vector<std::vector<Uri>> cyclic_components(const std::map<Uri, std::set<Uri>>& edges) {
  std::map<Uri, int> index, low;
  std::set<Uri> on_stack;
  std::vector<Uri> stack;
  std::vector<std::vector<Uri>> out;
  int counter = 0;

  std::function<void(const Uri&)> strongconnect = [&](const Uri& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    if (auto it = edges.find(v); it != edges.end()) {
      for (const Uri& w : it->second) {
        if (!index.count(w)) {
          strongconnect(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack.count(w)) {
          low[v] = std::min(low[v], index[w]);
        }
      }
    }
    if (low[v] == index[v]) {
      std::vector<Uri> component;
      while (true) {
        Uri w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component.push_back(w);
        if (w == v) break;
      }
      const auto self = edges.find(v);
      const bool self_loop = self != edges.end() && self->second.count(v);
      if (component.size() > 1 || self_loop) {
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
    }
  };
  for (const auto& [v, _] : edges)
    if (!index.count(v)) strongconnect(v);
  return out;
}

}  // namespace

ValidationReport validate(std::span<const ResourceMap> maps) {
  ValidationReport report;
  auto emit = [&](DiagnosticCode code, std::string message, const Uri& subject) {
    auto& list = is_error(code) ? report.errors : report.warnings;
    list.push_back(Diagnostic{code, std::move(message), subject});
  };

  // Identical copies of one map count once.
  std::vector<const ResourceMap*> unique;
  for (const ResourceMap& m : maps)
    if (std::none_of(unique.begin(), unique.end(), [&](const ResourceMap* u) { return *u == m; }))
      unique.push_back(&m);

  std::map<Uri, std::vector<const ResourceMap*>> by_aggregation;
  std::set<Uri> known;
  for (const ResourceMap* m : unique) {
    by_aggregation[m->describes()].push_back(m);
    known.insert(m->uri());
    known.insert(m->describes());
    for (Uri& r : m->resources()) known.insert(std::move(r));
  }

  std::map<Uri, std::set<Uri>> nesting;
  for (const auto& [agg, group] : by_aggregation) {
    if (group.size() > 1) {
      std::vector<std::string> rems;
      for (const ResourceMap* m : group) rems.push_back(m->uri().str());
      std::sort(rems.begin(), rems.end());
      std::string list;
      for (const auto& r : rems) list += (list.empty() ? "" : ", ") + r;
      emit(DiagnosticCode::E2, "described by " + std::to_string(group.size()) + " Resource Maps: " + list,
           agg);
    }
    for (const ResourceMap* m : group) {
      const std::vector<Uri> resources = m->resources();
      if (resources.empty()) emit(DiagnosticCode::E1, "aggregation has no resources", agg);
      for (const Uri& r : resources) {
        if (by_aggregation.count(r)) {
          nesting[agg].insert(r);
        } else if (m->statements().contains(Triple{r, vocab::rdf_type(), vocab::aggregation_class()})) {
          emit(DiagnosticCode::W1,
               "nested aggregation in " + agg.str() + " has no Resource Map", r);
        }
      }
      for (const Triple& t : m->statements()) {
        if (t.predicate == vocab::describes() || t.predicate == vocab::aggregates() ||
            is_nested_marker(t))
          continue;
        const Uri* obj = t.object.as_uri();
        if (!known.count(t.subject)) {
          emit(DiagnosticCode::W2, "relationship subject in " + m->uri().str() + " is unknown to every aggregation",
               t.subject);
        } else if (obj && !known.count(*obj)) {
          emit(DiagnosticCode::W2, "relationship object in " + m->uri().str() + " is unknown to every aggregation",
               *obj);
        }
      }
    }
  }

  for (const auto& component : cyclic_components(nesting)) {
    std::string members;
    for (const Uri& u : component) members += (members.empty() ? "" : " -> ") + u.str();
    emit(DiagnosticCode::E3, "nesting cycle among " + members, component.front());
  }

  for (auto* list : {&report.errors, &report.warnings}) {
    std::sort(list->begin(), list->end());
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  return report;
}

}  // namespace oreweave
