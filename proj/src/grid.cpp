#include "msowb/grid.hpp"

#include <algorithm>
#include <set>

#include "msowb/error.hpp"

namespace msowb {

GridLikeGraph make_grid(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2)
    throw InvalidArgument("grid dimensions must be at least 2x2, got " + std::to_string(rows) +
                          "x" + std::to_string(cols));
  GridLikeGraph out;
  out.graph = Graph(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Vertex v = i * cols + j;
      if (j + 1 < cols) out.graph.add_edge(v, v + 1);
      if (i + 1 < rows) out.graph.add_edge(v, v + cols);
    }
  for (std::size_t i = 0; i < rows; ++i) {
    Path p;
    for (std::size_t j = 0; j < cols; ++j) p.push_back(i * cols + j);
    out.paths.push_back(std::move(p));
    out.classes.push_back(PathClass::White);
  }
  for (std::size_t j = 0; j < cols; ++j) {
    Path p;
    for (std::size_t i = 0; i < rows; ++i) p.push_back(i * cols + j);
    out.paths.push_back(std::move(p));
    out.classes.push_back(PathClass::Black);
  }
  return out;
}

Graph intersection_graph(const PathCollection& paths) {
  std::vector<std::vector<Vertex>> sorted;
  sorted.reserve(paths.size());
  for (const auto& p : paths) {
    auto s = p;
    std::sort(s.begin(), s.end());
    sorted.push_back(std::move(s));
  }
  Graph g(paths.size());
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = a + 1; b < sorted.size(); ++b) {
      auto i = sorted[a].begin();
      auto j = sorted[b].begin();
      while (i != sorted[a].end() && j != sorted[b].end()) {
        if (*i == *j) {
          g.add_edge(a, b);
          break;
        }
        if (*i < *j) ++i; else ++j;
      }
    }
  return g;
}

GridLikeVerdict check_paths(const Graph& g, const PathCollection& paths) {
  GridLikeVerdict v;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const Path& p = paths[k];
    if (p.size() < 2) {
      v.failure = GridLikeFailure::ShortPath;
      v.detail = "path " + std::to_string(k) + " has fewer than two vertices";
      return v;
    }
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= g.order() || !seen.insert(p[i]).second ||
          (i > 0 && !g.adjacent(p[i - 1], p[i]))) {
        v.failure = GridLikeFailure::InvalidPath;
        v.detail = "path " + std::to_string(k) + " is not a path of the graph";
        return v;
      }
    }
  }
  return v;
}

GridLikeVerdict validate_grid_like(const Graph& g, const PathCollection& paths) {
  GridLikeVerdict v = check_paths(g, paths);
  if (!v.accepted()) return v;

  std::vector<bool> vertex_seen(g.order(), false);
  std::set<Edge> covered;
  for (const Path& p : paths)
    for (std::size_t i = 0; i < p.size(); ++i) {
      vertex_seen[p[i]] = true;
      if (i > 0) covered.emplace(p[i - 1], p[i]);
    }
  for (Vertex x = 0; x < g.order(); ++x)
    if (!vertex_seen[x]) {
      v.failure = GridLikeFailure::NotUnion;
      v.detail = "vertex " + std::to_string(x) + " lies on no path";
      return v;
    }
  for (const Edge& e : g.edges())
    if (!covered.count(e)) {
      v.failure = GridLikeFailure::NotUnion;
      v.detail = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} lies on no path";
      return v;
    }

  auto sides = bipartition(intersection_graph(paths));
  if (sides.empty() && !paths.empty()) {
    v.failure = GridLikeFailure::NotBipartite;
    v.detail = "intersection graph of the paths is not bipartite";
    return v;
  }

  // Consequences that must follow from the three conditions.
  for (int cls = 0; cls < 2; ++cls) {
    std::vector<int> owner(g.order(), -1);
    for (std::size_t k = 0; k < paths.size(); ++k) {
      if (sides[k] != cls) continue;
      for (Vertex x : paths[k]) {
        if (owner[x] >= 0) {
          v.failure = GridLikeFailure::ClassNotDisjoint;
          v.detail = "paths " + std::to_string(owner[x]) + " and " + std::to_string(k) +
                     " share vertex " + std::to_string(x);
          return v;
        }
        owner[x] = static_cast<int>(k);
      }
    }
  }
  if (g.max_degree() > 4) {
    v.failure = GridLikeFailure::DegreeAboveFour;
    v.detail = "maximum degree " + std::to_string(g.max_degree()) + " exceeds 4";
    return v;
  }

  for (int s : sides) v.classes.push_back(s == 0 ? PathClass::White : PathClass::Black);
  return v;
}

std::string to_string(GridLikeFailure f) {
  switch (f) {
    case GridLikeFailure::None: return "none";
    case GridLikeFailure::InvalidPath: return "invalid path";
    case GridLikeFailure::ShortPath: return "path with fewer than two vertices";
    case GridLikeFailure::NotUnion: return "graph is not the union of the paths";
    case GridLikeFailure::NotBipartite: return "intersection graph not bipartite";
    case GridLikeFailure::ClassNotDisjoint: return "path class not vertex-disjoint";
    case GridLikeFailure::DegreeAboveFour: return "maximum degree above 4";
  }
  return "unknown";
}

}  // namespace msowb
