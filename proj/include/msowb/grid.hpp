#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msowb/graph.hpp"

namespace msowb {

using Path = std::vector<Vertex>;

/// Paths over a host graph. Each path has >= 2 pairwise distinct vertices and
/// consecutive vertices are adjacent in the host; `check_paths` enforces this.
using PathCollection = std::vector<Path>;

enum class PathClass { White, Black };

/// A graph that is the union of its paths, together with a bipartition of the
/// paths into two families of pairwise vertex-disjoint paths.
struct GridLikeGraph {
  Graph graph;
  PathCollection paths;
  std::vector<PathClass> classes;
};

/// A subgraph of the intersection graph I(P) of a grid-like graph: vertex i
/// stands for path `paths[i]`.
struct PathSubgraph {
  std::vector<std::size_t> paths;
  Graph graph;
};

/// Which grid-like condition an input violates.
enum class GridLikeFailure {
  None,
  InvalidPath,        // repeated vertex or non-adjacent consecutive vertices
  ShortPath,          // a path with fewer than two vertices
  NotUnion,           // some vertex or edge of the graph lies on no path
  NotBipartite,       // the intersection graph has an odd cycle
  ClassNotDisjoint,   // two paths of one class share a vertex
  DegreeAboveFour,
};

struct GridLikeVerdict {
  GridLikeFailure failure = GridLikeFailure::None;
  std::string detail;
  std::vector<PathClass> classes;  // filled on acceptance

  bool accepted() const { return failure == GridLikeFailure::None; }
};

/// rows x cols grid. Vertex (i,j) is i*cols+j; white path i is row i, black
/// path j (index rows+j) is column j. Throws InvalidArgument below 2x2.
GridLikeGraph make_grid(std::size_t rows, std::size_t cols);

/// One vertex per path, an edge between two paths whenever they share a vertex.
Graph intersection_graph(const PathCollection& paths);

/// Checks that paths are genuine paths of g (InvalidPath / ShortPath).
GridLikeVerdict check_paths(const Graph& g, const PathCollection& paths);

/// Decides whether (g, paths) is grid-like. On acceptance the verdict carries a
/// 2-colouring of the paths, and the two classes have been confirmed to be
/// vertex-disjoint families with max degree of g at most 4.
GridLikeVerdict validate_grid_like(const Graph& g, const PathCollection& paths);

std::string to_string(GridLikeFailure f);

}  // namespace msowb
