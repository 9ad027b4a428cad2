#pragma once

#include <map>
#include <optional>
#include <set>

#include "msowb/graph.hpp"

namespace msowb {

/// Edge colours, 1-based.
struct EdgeColouring {
  std::map<Edge, int> colours;

  int colour(const Edge& e) const;
  /// Largest colour index in use (0 when empty).
  int colour_count() const;
};

/// Greedy strong edge colouring: edges in lexicographic order each take the
/// least colour not used by any edge at distance at most 1 (sharing an end or
/// joined by a third edge). At most 2*D*(D-1)+1 colours for max degree D,
/// so at most 25 when D <= 4.
EdgeColouring strong_edge_colour(const Graph& g);

/// True iff no two distinct edges at distance <= 1 share a colour. Throws
/// InvalidArgument if c misses an edge of g or colours a non-edge.
bool validate_strong(const Graph& g, const EdgeColouring& c);

/// The first pair of conflicting edges, if any.
std::optional<std::pair<Edge, Edge>> strong_conflict(const Graph& g, const EdgeColouring& c);

/// For every edge xy of g: xy is white iff w(x) and w(y) intersect, where
/// w(v) is the set of colours of white edges at v.
bool key_observation_check(const Graph& g, const EdgeColouring& c, const std::set<Edge>& white);

}  // namespace msowb
