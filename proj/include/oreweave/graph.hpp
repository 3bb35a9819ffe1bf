#pragma once

// Minimal RDF substrate: URIs, literals, triples and set-valued graphs.
//
// There are no blank nodes. Every node is either an absolute URI or a literal,
// so two graphs are equal exactly when their triple sets are equal.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace oreweave {

// An absolute URI, compared as an exact string (no normalization).
//
// Ordering follows the bytewise order of the bracketed form "<uri>", which is
// what keeps canonical documents sorted line by line.
class Uri {
 public:
  // Throws ValidationError unless is_valid(value).
  explicit Uri(std::string value);

  // Scheme (a letter, then letters/digits/"+-.") followed by ':' and at least
  // one more character. No whitespace, control characters or any of <>"{}|\^`.
  static bool is_valid(std::string_view value) noexcept;
  static std::optional<Uri> parse(std::string_view value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Uri&, const Uri&) = default;
  friend std::strong_ordering operator<=>(const Uri& a, const Uri& b) noexcept;

 private:
  std::string value_;
};

class Literal {
 public:
  // A literal has at most one of datatype or language. Throws ValidationError
  // on a malformed language tag or when both are given.
  explicit Literal(std::string lexical, std::optional<Uri> datatype = std::nullopt,
                   std::optional<std::string> language = std::nullopt);

  const std::string& lexical() const noexcept { return lexical_; }
  const std::optional<Uri>& datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& language() const noexcept { return language_; }

  // "lexical"[@lang][^^<datatype>] with \" \\ \n escaped.
  const std::string& serialized() const noexcept { return serialized_; }

  static bool is_valid_language(std::string_view tag) noexcept;

  friend bool operator==(const Literal& a, const Literal& b) noexcept {
    return a.serialized_ == b.serialized_;
  }
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) noexcept {
    return a.serialized_ <=> b.serialized_;
  }

 private:
  std::string lexical_;
  std::optional<Uri> datatype_;
  std::optional<std::string> language_;
  std::string serialized_;
};

// Escapes quote, backslash and newline; everything else passes through.
std::string escape_literal(std::string_view lexical);

class Term {
 public:
  Term(Uri uri) : value_(std::move(uri)) {}              // NOLINT(google-explicit-constructor)
  Term(Literal literal) : value_(std::move(literal)) {}  // NOLINT(google-explicit-constructor)

  bool is_uri() const noexcept { return std::holds_alternative<Uri>(value_); }
  bool is_literal() const noexcept { return std::holds_alternative<Literal>(value_); }
  const Uri& uri() const { return std::get<Uri>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }
  const Uri* as_uri() const noexcept { return std::get_if<Uri>(&value_); }

  // <uri> or the literal's serialized form.
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;
  // Literals sort before URIs, matching '"' < '<'.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  std::variant<Uri, Literal> value_;
};

struct Triple {
  Uri subject;
  Uri predicate;
  Term object;

  // Builds a triple from arbitrary terms; a literal subject or predicate is a
  // ValidationError.
  static Triple from_terms(const Term& subject, const Term& predicate, Term object);

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;
};

struct TriplePattern {
  std::optional<Uri> subject;
  std::optional<Uri> predicate;
  std::optional<Term> object;

  bool matches(const Triple& t) const;
};

namespace detail {
// Lets the triple set be searched by subject or by (subject, predicate).
struct TripleLess {
  using is_transparent = void;
  bool operator()(const Triple& a, const Triple& b) const { return a < b; }
  bool operator()(const Triple& a, const Uri& s) const { return a.subject < s; }
  bool operator()(const Uri& s, const Triple& b) const { return s < b.subject; }
  bool operator()(const Triple& a, const std::pair<Uri, Uri>& sp) const {
    return std::tie(a.subject, a.predicate) < std::tie(sp.first, sp.second);
  }
  bool operator()(const std::pair<Uri, Uri>& sp, const Triple& b) const {
    return std::tie(sp.first, sp.second) < std::tie(b.subject, b.predicate);
  }
};
}  // namespace detail

// A finite set of triples, iterated in canonical order.
class Graph {
 public:
  using Set = std::set<Triple, detail::TripleLess>;
  using const_iterator = Set::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples) : triples_(triples) {}
  template <typename It>
  Graph(It first, It last) : triples_(first, last) {}

  // Builder-style mutation on an owned value. Returns false when t was already present.
  bool add(Triple t) { return triples_.insert(std::move(t)).second; }
  bool erase(const Triple& t) { return triples_.erase(t) > 0; }

  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  // Triples with the given subject (and predicate), as an iterator range.
  std::pair<const_iterator, const_iterator> with_subject(const Uri& s) const {
    return triples_.equal_range(s);
  }
  std::pair<const_iterator, const_iterator> with_subject_predicate(const Uri& s,
                                                                   const Uri& p) const {
    return triples_.equal_range(std::pair<Uri, Uri>(s, p));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

 private:
  Set triples_;
};

Graph insert(const Graph& graph, Triple t);
Graph merge(const Graph& a, const Graph& b);
Graph match(const Graph& graph, const TriplePattern& pattern);

// Nodes reachable from start by following triples subject -> object, restricted
// to the given predicates when set. Always contains start.
std::set<Uri> reachable(const Graph& graph, const Uri& start,
                        const std::optional<std::set<Uri>>& predicates = std::nullopt);

}  // namespace oreweave
