#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace msowb {

using Vertex = std::size_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Loops are rejected, repeated edges are absorbed. Neighbour lists are kept
/// sorted so that iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  /// Appends a fresh isolated vertex and returns its id.
  Vertex add_vertex();
  /// Returns true if the edge was new.
  bool add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Graph whose vertices carry subsets of a declared, ordered label alphabet.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(Graph g, std::vector<std::string> alphabet = {});

  const Graph& graph() const { return graph_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }

  /// Index of a label in the alphabet, or -1.
  int label_index(const std::string& name) const;
  void add_label(Vertex v, const std::string& name);
  void remove_label(Vertex v, const std::string& name);
  bool has_label(Vertex v, const std::string& name) const;
  bool has_label(Vertex v, int index) const;
  /// Labels of v in alphabet order.
  std::vector<std::string> labels_of(Vertex v) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  Graph graph_;
  std::vector<std::string> alphabet_;
  // labels_[v] holds sorted alphabet indices
  std::vector<std::vector<int>> labels_;
};

/// Directed graph without loops; antiparallel arcs are allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  std::size_t order() const { return out_.size(); }
  bool add_arc(Vertex from, Vertex to);
  bool has_arc(Vertex from, Vertex to) const;
  const std::vector<Vertex>& successors(Vertex v) const { return out_.at(v); }
  const std::vector<Vertex>& predecessors(Vertex v) const { return in_.at(v); }
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Same vertex set, {u,v} whenever (u,v) or (v,u) is an arc.
Graph underlying(const Digraph& d);

/// Every vertex has degree exactly 1 or exactly 3.
bool is_13_regular(const Graph& g);

/// Replaces each edge {u,v} with count t by a path u-w1-...-wt-v.
///
/// Fresh vertices are numbered after the original ones, edge by edge in
/// lexicographic order, each run ordered from u (the smaller end) to v.
/// Throws InvalidArgument if the plan names a non-edge.
Graph subdivide(const Graph& g, const std::map<Edge, std::size_t>& plan);

/// Subgraph induced by `keep`, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Connected component index per vertex (components numbered from 0 in vertex order).
std::vector<std::size_t> components(const Graph& g);

bool is_connected(const Graph& g);

/// Proper 2-colouring (0/1) if g is bipartite, empty otherwise.
std::vector<int> bipartition(const Graph& g);

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

}  // namespace msowb
