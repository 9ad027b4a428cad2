#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "msowb/graph.hpp"

namespace msowb {

/// A vertex bijection mapping g onto h, if one exists. Backtracking with
/// degree-based candidate filtering; intended for graphs up to a few hundred
/// vertices with little symmetry, or small graphs in general.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

/// True iff `map` (a permutation of vertices of g) carries g's edges exactly
/// onto h's edges.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map);

/// Lexicographically smallest upper-triangle adjacency code over all vertex
/// permutations. Only for graphs with at most 8 vertices.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n vertices
/// (n <= 6), in order of increasing canonical code.
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n);

}  // namespace msowb
