#include "msowb/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "msowb/error.hpp"

namespace msowb {

namespace {

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), map_(g.order(), SIZE_MAX),
                                              used_(h.order(), false) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), 0);
    // Visit high-degree vertices first, then grow along neighbours so that
    // adjacency constraints bite early.
    std::vector<bool> placed(g.order(), false);
    std::vector<Vertex> seq;
    while (seq.size() < g.order()) {
      Vertex best = SIZE_MAX;
      std::size_t best_links = 0;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (placed[v]) continue;
        std::size_t links = 0;
        for (Vertex w : g.neighbours(v)) links += placed[w];
        if (best == SIZE_MAX || links > best_links ||
            (links == best_links && g.degree(v) > g.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = true;
      seq.push_back(best);
    }
    order_ = std::move(seq);
  }

  bool run(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    for (Vertex cand = 0; cand < h_.order(); ++cand) {
      if (used_[cand] || h_.degree(cand) != g_.degree(v)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex u = order_[i];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], cand);
      }
      if (!ok) continue;
      map_[v] = cand;
      used_[cand] = true;
      if (run(depth + 1)) return true;
      used_[cand] = false;
      map_[v] = SIZE_MAX;
    }
    return false;
  }

  std::vector<Vertex> mapping() const { return map_; }

 private:
  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
};

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;
  IsoSearch search(g, h);
  if (!search.run(0)) return std::nullopt;
  return search.mapping();
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& map) {
  if (g.order() != h.order() || g.size() != h.size() || map.size() != g.order()) return false;
  std::vector<bool> hit(h.order(), false);
  for (Vertex m : map) {
    if (m >= h.order() || hit[m]) return false;
    hit[m] = true;
  }
  for (const Edge& e : g.edges())
    if (!h.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

std::uint64_t canonical_code(const Graph& g) {
  std::size_t n = g.order();
  if (n > 8) throw CapacityError("canonical_code supports at most 8 vertices");
  bool adj[8][8] = {};
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        code = (code << 1) | (adj[perm[i]][perm[j]] ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
  if (n > 6) throw CapacityError("graph enumeration supports at most 6 vertices");
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::map<std::uint64_t, Graph> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) g.add_edge(slots[i].u, slots[i].v);
    classes.try_emplace(canonical_code(g), g);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace msowb
