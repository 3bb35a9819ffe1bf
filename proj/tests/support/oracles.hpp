#pragma once

// Reference implementations used as test oracles. They work on plain strings
// and share no code with the library.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Edge = std::pair<std::string, std::string>;

// Directed breadth-first search. Includes start.
std::set<std::string> bfs(const std::vector<Edge>& edges, const std::string& start);

// Breadth-first search treating every edge as two-way, up to max_depth hops.
std::set<std::string> undirected_bfs(const std::vector<Edge>& edges, const std::string& start,
                                     std::optional<std::size_t> max_depth = std::nullopt);

// Number of distinct strings after sort and unique.
std::size_t sort_dedup_count(std::vector<std::string> items);

// Groups of nodes lying on a common directed cycle, found through a
// transitive-closure matrix.
std::vector<std::set<std::string>> cyclic_groups(const std::vector<Edge>& edges);

// document -> mentioned names, inverted to name -> documents, keeping names
// mentioned by at least two documents.
std::map<std::string, std::set<std::string>> inverted_index(
    const std::map<std::string, std::set<std::string>>& mentions_by_document);

}  // namespace oracle
