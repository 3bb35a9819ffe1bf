#include "oreweave/harvest.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <future>
#include <sstream>

#include "fetch.hpp"
#include "oreweave/error.hpp"
#include "oreweave/serialization.hpp"
#include "oreweave/store.hpp"
#include "oreweave/vocab.hpp"

namespace oreweave {

namespace fs = std::filesystem;

void UnionGraph::add(const ResourceMap& rem) {
  for (const Triple& t : rem.statements()) {
    graph_.add(t);
    provenance_[t].insert(rem.uri());
  }
}

void UnionGraph::merge(const UnionGraph& other) {
  for (const auto& [t, sources] : other.provenance_) {
    graph_.add(t);
    provenance_[t].insert(sources.begin(), sources.end());
  }
}

const std::set<Uri>& UnionGraph::provenance_of(const Triple& t) const {
  static const std::set<Uri> kNone;
  auto it = provenance_.find(t);
  return it == provenance_.end() ? kNone : it->second;
}

UnionGraph union_of(std::span<const ResourceMap> maps) {
  UnionGraph g;
  for (const ResourceMap& m : maps) g.add(m);
  return g;
}

std::string HarvestResult::report() const {
  std::string out;
  for (const SourceOutcome& o : outcomes) {
    if (o.ok) {
      out += "OK " + o.source + " " + std::to_string(o.triples) + "\n";
    } else {
      std::string reason = o.reason;
      std::replace(reason.begin(), reason.end(), '\n', ' ');
      out += "FAIL " + o.source + " " + reason + "\n";
    }
  }
  return out;
}

std::vector<ResourceMap> HarvestResult::maps() const {
  std::vector<ResourceMap> out;
  for (const SourceOutcome& o : outcomes)
    if (o.map) out.push_back(*o.map);
  return out;
}

namespace {

bool is_http(std::string_view s) { return s.starts_with("http://") || s.starts_with("https://"); }

std::string local_path(const std::string& source) {
  if (source.starts_with("file://")) {
    std::string rest = source.substr(7);
    // file://localhost/path and file:///path
    if (rest.starts_with("localhost/")) rest = rest.substr(9);
    if (auto decoded = percent_decode(rest)) return *decoded;
    return rest;
  }
  return source;
}

// Directories expand into the map files they contain.
std::vector<std::string> expand_sources(const std::vector<std::string>& sources) {
  std::vector<std::string> out;
  for (const std::string& s : sources) {
    if (is_http(s)) {
      out.push_back(s);
      continue;
    }
    const fs::path p = local_path(s);
    std::error_code ec;
    if (!fs::is_directory(p, ec)) {
      out.push_back(s);
      continue;
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(p, ec)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".remc" || ext == ".rdf"))
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    out.insert(out.end(), files.begin(), files.end());
  }
  return out;
}

SourceOutcome fetch_one(const std::string& source, const HarvestOptions& options) {
  SourceOutcome outcome;
  outcome.source = source;
  try {
    std::string bytes;
    std::optional<Format> format;
    if (is_http(source)) {
      std::string path = source.substr(0, source.find_first_of("?#"));
      format = format_from_extension(path);
      detail::Fetched fetched = detail::http_get(source, options.timeout);
      bytes = std::move(fetched.bytes);
      if (!format) format = fetched.format;
    } else {
      const std::string path = local_path(source);
      if (!fs::exists(path)) throw Error("no such file");
      bytes = read_file(path);
      format = format_from_extension(path);
    }
    if (!format) format = sniff_format(bytes);
    ResourceMap rem = parse(bytes, *format);
    outcome.triples = rem.statements().size();
    outcome.map = std::move(rem);
    outcome.ok = true;
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.reason = e.what();
  }
  return outcome;
}

}  // namespace

HarvestResult harvest(const std::vector<std::string>& sources, const HarvestOptions& options) {
  const std::vector<std::string> expanded = expand_sources(sources);
  HarvestResult result;
  result.outcomes.reserve(expanded.size());
  if (options.concurrent && expanded.size() > 1) {
    std::vector<std::future<SourceOutcome>> pending;
    pending.reserve(expanded.size());
    for (const std::string& s : expanded)
      pending.push_back(std::async(std::launch::async, fetch_one, s, options));
    // Single merger, in source order.
    for (auto& f : pending) result.outcomes.push_back(f.get());
  } else {
    for (const std::string& s : expanded) result.outcomes.push_back(fetch_one(s, options));
  }
  for (const SourceOutcome& o : result.outcomes)
    if (o.map) result.graph.add(*o.map);
  return result;
}

std::map<Uri, std::set<Uri>> co_referenced(const UnionGraph& graph) {
  std::map<Uri, std::set<Uri>> mentions;
  for (const auto& [t, rems] : graph.provenance()) {
    mentions[t.subject].insert(rems.begin(), rems.end());
    if (const Uri* o = t.object.as_uri(); o && t.predicate != vocab::rdf_type())
      mentions[*o].insert(rems.begin(), rems.end());
  }
  std::erase_if(mentions, [](const auto& entry) { return entry.second.size() < 2; });
  return mentions;
}

TraceResult trace(const UnionGraph& graph, const Uri& entry, std::optional<std::size_t> max_depth) {
  std::map<Uri, std::vector<TraceStep>> adjacency;
  for (const Triple& t : graph.graph()) {
    const Uri* o = t.object.as_uri();
    if (!o || t.predicate == vocab::rdf_type()) continue;
    adjacency[t.subject].push_back(TraceStep{t, true});
    adjacency[*o].push_back(TraceStep{t, false});
  }

  TraceResult result;
  std::map<Uri, TracePath> paths;
  result.nodes.insert(entry);
  std::deque<std::pair<Uri, std::size_t>> frontier{{entry, 0}};
  while (!frontier.empty()) {
    auto [node, depth] = std::move(frontier.front());
    frontier.pop_front();
    if (max_depth && depth >= *max_depth) continue;
    auto it = adjacency.find(node);
    if (it == adjacency.end()) continue;
    for (const TraceStep& step : it->second) {
      const Uri& next = step.forward ? step.triple.object.uri() : step.triple.subject;
      if (!result.nodes.insert(next).second) continue;
      TracePath path{next, {}};
      if (auto parent = paths.find(node); parent != paths.end()) path.steps = parent->second.steps;
      path.steps.push_back(step);
      paths.emplace(next, std::move(path));
      frontier.emplace_back(next, depth + 1);
    }
  }

  for (const Uri& n : result.nodes) {
    auto [first, last] = graph.graph().with_subject(n);
    for (auto it = first; it != last; ++it) {
      const Uri* o = it->object.as_uri();
      if (!o || it->predicate == vocab::rdf_type() || result.nodes.count(*o))
        result.subgraph.add(*it);
    }
  }
  for (auto& [_, p] : paths) result.paths.push_back(std::move(p));
  std::stable_sort(result.paths.begin(), result.paths.end(),
                   [](const TracePath& a, const TracePath& b) { return a.depth() < b.depth(); });
  return result;
}

std::string TraceResult::to_text() const {
  std::ostringstream out;
  for (const TracePath& p : paths) {
    out << p.depth() << '\t' << p.target.str() << '\t';
    bool first = true;
    for (const TraceStep& s : p.steps) {
      const Uri& from = s.forward ? s.triple.subject : s.triple.object.uri();
      const Uri& to = s.forward ? s.triple.object.uri() : s.triple.subject;
      if (first) out << '<' << from.str() << '>';
      first = false;
      out << (s.forward ? " -[" : " <-[") << s.triple.predicate.str()
          << (s.forward ? "]-> <" : "]- <") << to.str() << '>';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace oreweave
