#include "msowb/graph.hpp"

#include <algorithm>
#include <queue>

#include "msowb/error.hpp"

namespace msowb {

namespace {

bool sorted_insert(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool sorted_contains(const std::vector<Vertex>& list, Vertex v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return adjacency_.size() - 1;
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order())
    throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} references an undeclared vertex");
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (!sorted_insert(adjacency_[u], v)) return false;
  sorted_insert(adjacency_[v], u);
  ++edge_count_;
  return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& a = adjacency_[u];
  const auto& b = adjacency_[v];
  return a.size() <= b.size() ? sorted_contains(a, v) : sorted_contains(b, u);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

LabeledGraph::LabeledGraph(Graph g, std::vector<std::string> alphabet)
    : graph_(std::move(g)), alphabet_(std::move(alphabet)), labels_(graph_.order()) {
  std::vector<std::string> seen = alphabet_;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidArgument("label alphabet contains a duplicate name");
}

int LabeledGraph::label_index(const std::string& name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  return it == alphabet_.end() ? -1 : static_cast<int>(it - alphabet_.begin());
}

void LabeledGraph::add_label(Vertex v, const std::string& name) {
  int idx = label_index(name);
  if (idx < 0) throw InvalidArgument("label '" + name + "' is not in the alphabet");
  auto& list = labels_.at(v);
  auto it = std::lower_bound(list.begin(), list.end(), idx);
  if (it == list.end() || *it != idx) list.insert(it, idx);
}

void LabeledGraph::remove_label(Vertex v, const std::string& name) {
  int idx = label_index(name);
  if (idx < 0) return;
  auto& list = labels_.at(v);
  auto it = std::lower_bound(list.begin(), list.end(), idx);
  if (it != list.end() && *it == idx) list.erase(it);
}

bool LabeledGraph::has_label(Vertex v, const std::string& name) const {
  return has_label(v, label_index(name));
}

bool LabeledGraph::has_label(Vertex v, int index) const {
  if (index < 0) return false;
  const auto& list = labels_.at(v);
  return std::binary_search(list.begin(), list.end(), index);
}

std::vector<std::string> LabeledGraph::labels_of(Vertex v) const {
  std::vector<std::string> out;
  for (int idx : labels_.at(v)) out.push_back(alphabet_[idx]);
  return out;
}

bool Digraph::add_arc(Vertex from, Vertex to) {
  if (from >= order() || to >= order())
    throw InvalidArgument("arc references an undeclared vertex");
  if (from == to) throw InvalidArgument("loop arc at vertex " + std::to_string(from));
  if (!sorted_insert(out_[from], to)) return false;
  sorted_insert(in_[to], from);
  return true;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (from >= order() || to >= order()) return false;
  return sorted_contains(out_[from], to);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : out_[u]) out.emplace_back(u, v);
  return out;
}

Graph underlying(const Digraph& d) {
  Graph g(d.order());
  for (auto [u, v] : d.arcs()) g.add_edge(u, v);
  return g;
}

bool is_13_regular(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 1 && g.degree(v) != 3) return false;
  return true;
}

Graph subdivide(const Graph& g, const std::map<Edge, std::size_t>& plan) {
  for (const auto& [e, count] : plan)
    if (!g.adjacent(e.u, e.v))
      throw InvalidArgument("subdivision plan names non-edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}");
  Graph out(g.order());
  for (const Edge& e : g.edges()) {
    auto it = plan.find(e);
    std::size_t count = it == plan.end() ? 0 : it->second;
    Vertex prev = e.u;
    for (std::size_t i = 0; i < count; ++i) {
      Vertex w = out.add_vertex();
      out.add_edge(prev, w);
      prev = w;
    }
    out.add_edge(prev, e.v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<std::size_t> index(g.order(), SIZE_MAX);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = i;
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : g.neighbours(keep[i]))
      if (index[w] != SIZE_MAX && i < index[w]) out.add_edge(i, index[w]);
  return out;
}

std::vector<std::size_t> components(const Graph& g) {
  std::vector<std::size_t> comp(g.order(), SIZE_MAX);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != SIZE_MAX) continue;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbours(v))
        if (comp[w] == SIZE_MAX) {
          comp[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  auto comp = components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

std::vector<int> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbours(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return {};
        }
      }
    }
  }
  return side;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace msowb
