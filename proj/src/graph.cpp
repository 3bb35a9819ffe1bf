#include "oreweave/graph.hpp"

#include <algorithm>
#include <deque>

#include "oreweave/error.hpp"

namespace oreweave {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_forbidden_uri_char(unsigned char c) {
  if (c <= 0x20 || c == 0x7F) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '\\': case '^': case '`':
      return true;
    default:
      return false;
  }
}

}  // namespace

Uri::Uri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw ValidationError("invalid URI: '" + value_ + "'");
}

bool Uri::is_valid(std::string_view value) noexcept {
  if (value.empty() || !is_alpha(value.front())) return false;
  std::size_t colon = std::string_view::npos;
  for (std::size_t i = 1; i < value.size(); ++i) {
    const char c = value[i];
    if (c == ':') {
      colon = i;
      break;
    }
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  if (colon == std::string_view::npos || colon + 1 == value.size()) return false;
  return std::none_of(value.begin(), value.end(),
                      [](char c) { return is_forbidden_uri_char(static_cast<unsigned char>(c)); });
}

std::optional<Uri> Uri::parse(std::string_view value) {
  if (!is_valid(value)) return std::nullopt;
  return Uri(std::string(value));
}

std::strong_ordering operator<=>(const Uri& a, const Uri& b) noexcept {
  // Compare as if both had a trailing '>'. '>' never occurs inside a URI, so
  // a proper prefix compares against '>' at the position where it ends.
  const std::string& x = a.value_;
  const std::string& y = b.value_;
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto cx = static_cast<unsigned char>(x[i]);
    const auto cy = static_cast<unsigned char>(y[i]);
    if (cx != cy) return cx <=> cy;
  }
  if (x.size() == y.size()) return std::strong_ordering::equal;
  if (x.size() < y.size())
    return static_cast<unsigned char>('>') <=> static_cast<unsigned char>(y[n]);
  return static_cast<unsigned char>(x[n]) <=> static_cast<unsigned char>('>');
}

std::string escape_literal(std::string_view lexical) {
  std::string out;
  out.reserve(lexical.size() + 2);
  for (const char c : lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

Literal::Literal(std::string lexical, std::optional<Uri> datatype,
                 std::optional<std::string> language)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), language_(std::move(language)) {
  if (datatype_ && language_)
    throw ValidationError("literal cannot carry both a datatype and a language tag");
  if (language_ && !is_valid_language(*language_))
    throw ValidationError("invalid language tag: '" + *language_ + "'");
  serialized_ = "\"" + escape_literal(lexical_) + "\"";
  if (language_) serialized_ += "@" + *language_;
  if (datatype_) serialized_ += "^^<" + datatype_->str() + ">";
}

bool Literal::is_valid_language(std::string_view tag) noexcept {
  // primary subtag of letters, then "-"-separated alphanumeric subtags, each 1..8
  std::size_t start = 0;
  bool first = true;
  while (true) {
    const std::size_t dash = tag.find('-', start);
    const std::string_view part =
        tag.substr(start, dash == std::string_view::npos ? std::string_view::npos : dash - start);
    if (part.empty() || part.size() > 8) return false;
    for (const char c : part)
      if (!(is_alpha(c) || (!first && is_digit(c)))) return false;
    if (dash == std::string_view::npos) return true;
    start = dash + 1;
    first = false;
  }
}

std::string Term::to_string() const {
  if (const Uri* u = as_uri()) return "<" + u->str() + ">";
  return literal().serialized();
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.is_literal() != b.is_literal())
    return a.is_literal() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_literal()) return a.literal() <=> b.literal();
  return a.uri() <=> b.uri();
}

Triple Triple::from_terms(const Term& subject, const Term& predicate, Term object) {
  if (!subject.is_uri()) throw ValidationError("literal in subject position: " + subject.to_string());
  if (!predicate.is_uri())
    throw ValidationError("literal in predicate position: " + predicate.to_string());
  return Triple{subject.uri(), predicate.uri(), std::move(object)};
}

bool TriplePattern::matches(const Triple& t) const {
  return (!subject || *subject == t.subject) && (!predicate || *predicate == t.predicate) &&
         (!object || *object == t.object);
}

Graph insert(const Graph& graph, Triple t) {
  Graph out = graph;
  out.add(std::move(t));
  return out;
}

Graph merge(const Graph& a, const Graph& b) {
  const Graph& big = a.size() >= b.size() ? a : b;
  const Graph& small = a.size() >= b.size() ? b : a;
  Graph out = big;
  for (const Triple& t : small) out.add(t);
  return out;
}

Graph match(const Graph& graph, const TriplePattern& pattern) {
  Graph out;
  auto collect = [&](auto first, auto last) {
    for (auto it = first; it != last; ++it)
      if (pattern.matches(*it)) out.add(*it);
  };
  if (pattern.subject && pattern.predicate) {
    auto [first, last] = graph.with_subject_predicate(*pattern.subject, *pattern.predicate);
    collect(first, last);
  } else if (pattern.subject) {
    auto [first, last] = graph.with_subject(*pattern.subject);
    collect(first, last);
  } else {
    collect(graph.begin(), graph.end());
  }
  return out;
}

std::set<Uri> reachable(const Graph& graph, const Uri& start,
                        const std::optional<std::set<Uri>>& predicates) {
  std::set<Uri> seen{start};
  std::deque<Uri> frontier{start};
  while (!frontier.empty()) {
    const Uri node = std::move(frontier.front());
    frontier.pop_front();
    auto [first, last] = graph.with_subject(node);
    for (auto it = first; it != last; ++it) {
      if (predicates && !predicates->count(it->predicate)) continue;
      const Uri* next = it->object.as_uri();
      if (next && seen.insert(*next).second) frontier.push_back(*next);
    }
  }
  return seen;
}

}  // namespace oreweave
