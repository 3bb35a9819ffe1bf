#include <map>
#include <set>

#include "oreweave/serialization.hpp"
#include "oreweave/vocab.hpp"

namespace oreweave {

namespace {

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string local_name(const Uri& u) {
  const std::string& s = u.str();
  const std::size_t cut = s.find_last_of("/#:");
  return cut == std::string::npos || cut + 1 == s.size() ? s : s.substr(cut + 1);
}

std::string render_term(const Term& t) {
  if (const Uri* u = t.as_uri()) return "<code>" + html_escape(u->str()) + "</code>";
  return "<q>" + html_escape(t.literal().lexical()) + "</q>";
}

class SplashWriter {
 public:
  explicit SplashWriter(std::span<const ResourceMap> maps) {
    for (const ResourceMap& m : maps) {
      auto [it, inserted] = by_aggregation_.emplace(m.describes(), &m);
      if (!inserted && m.uri() < it->second->uri()) it->second = &m;
    }
  }

  std::string page(const Aggregation& agg) {
    const ResourceMap* rem = find(agg.uri());
    out_ = "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>Aggregation " +
           html_escape(agg.uri().str()) + "</title>\n</head>\n<body>\n";
    out_ += "<h1>Aggregation</h1>\n<p class=\"aggregation\"><code>" + html_escape(agg.uri().str()) +
            "</code></p>\n";
    if (rem) {
      out_ += "<p class=\"resource-map\">Described by Resource Map <code>" +
              html_escape(rem->uri().str()) + "</code>, created " +
              format_timestamp(rem->created()) + "</p>\n";
    }

    out_ += "<h2>Aggregated resources</h2>\n";
    visited_.insert(agg.uri());
    resource_list(agg.resources(), 0);

    std::vector<Triple> relationships;
    if (rem) {
      for (const Triple& t : rem->statements()) {
        if (t.predicate == vocab::describes() || t.predicate == vocab::aggregates()) continue;
        relationships.push_back(t);
      }
    } else {
      relationships = agg.metadata();
    }
    versions(relationships);

    out_ += "<h2>Relationships</h2>\n";
    if (relationships.empty()) {
      out_ += "<p>None.</p>\n";
    } else {
      out_ += "<ul class=\"relationships\">\n";
      for (const Triple& t : relationships) {
        out_ += "<li>" + render_term(t.subject) + " <span class=\"predicate\" title=\"" +
                html_escape(t.predicate.str()) + "\">" + html_escape(local_name(t.predicate)) +
                "</span> " + render_term(t.object) + "</li>\n";
      }
      out_ += "</ul>\n";
    }
    out_ += "</body>\n</html>\n";
    return std::move(out_);
  }

 private:
  const ResourceMap* find(const Uri& agg) const {
    auto it = by_aggregation_.find(agg);
    return it == by_aggregation_.end() ? nullptr : it->second;
  }

  void indent(int depth) { out_.append(static_cast<std::size_t>(depth) * 2, ' '); }

  void resource_list(const std::vector<Uri>& resources, int depth) {
    indent(depth);
    out_ += "<ul>\n";
    for (const Uri& r : resources) {
      const std::string link = "<a class=\"resource\" href=\"" + html_escape(r.str()) + "\">" +
                               html_escape(r.str()) + "</a>";
      const ResourceMap* nested = find(r);
      indent(depth + 1);
      // The visited set keeps cyclic stores from recursing forever.
      if (nested && visited_.insert(r).second) {
        out_ += "<li><details open><summary>" + link + "</summary>\n";
        resource_list(nested->resources(), depth + 2);
        indent(depth + 1);
        out_ += "</details></li>\n";
      } else {
        out_ += "<li>" + link + "</li>\n";
      }
    }
    indent(depth);
    out_ += "</ul>\n";
  }

  void versions(const std::vector<Triple>& relationships) {
    std::map<Uri, std::vector<Uri>> next;
    std::set<Uri> targets;
    for (const Triple& t : relationships) {
      if (t.predicate != vocab::has_version() || !t.object.is_uri()) continue;
      next[t.subject].push_back(t.object.uri());
      targets.insert(t.object.uri());
    }
    if (next.empty()) return;

    std::vector<std::vector<Uri>> chains;
    std::set<Uri> seen;
    auto walk = [&](const Uri& start) {
      std::vector<Uri> chain{start};
      seen.insert(start);
      Uri at = start;
      while (true) {
        auto it = next.find(at);
        if (it == next.end()) break;
        const Uri* step = nullptr;
        for (const Uri& n : it->second)
          if (!seen.count(n)) {
            step = &n;
            break;
          }
        if (!step) break;
        chain.push_back(*step);
        seen.insert(*step);
        at = *step;
      }
      chains.push_back(std::move(chain));
    };
    for (const auto& [start, _] : next)
      if (!targets.count(start) && !seen.count(start)) walk(start);
    for (const auto& [start, _] : next)  // chains that are pure cycles
      if (!seen.count(start)) walk(start);

    out_ += "<h2>Versions</h2>\n<ol class=\"versions\">\n";
    for (const auto& chain : chains) {
      out_ += "<li>";
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out_ += " &rarr; ";
        out_ += "<code>" + html_escape(chain[i].str()) + "</code>";
      }
      out_ += "</li>\n";
    }
    out_ += "</ol>\n";
  }

  std::map<Uri, const ResourceMap*> by_aggregation_;
  std::set<Uri> visited_;
  std::string out_;
};

}  // namespace

std::string render_splash(const Aggregation& agg, std::span<const ResourceMap> maps) {
  return SplashWriter(maps).page(agg);
}

}  // namespace oreweave
