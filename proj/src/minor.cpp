#include "msowb/minor.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "msowb/error.hpp"

namespace msowb {

namespace {

// Adjacency rows as bitmasks; the graph has rows.size() vertices.
using Rows = std::vector<std::uint32_t>;

std::size_t edge_count(const Rows& rows) {
  std::size_t twice = 0;
  for (auto r : rows) twice += std::popcount(r);
  return twice / 2;
}

Rows remove_vertex(const Rows& rows, std::size_t v) {
  Rows out;
  out.reserve(rows.size() - 1);
  auto squeeze = [v](std::uint32_t r) {
    std::uint32_t low = r & ((1u << v) - 1);
    std::uint32_t high = (r >> (v + 1)) << v;
    return low | high;
  };
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (i != v) out.push_back(squeeze(rows[i]));
  return out;
}

// Merges v into u and removes v.
Rows contract(Rows rows, std::size_t u, std::size_t v) {
  std::uint32_t merged = (rows[u] | rows[v]) & ~(1u << u) & ~(1u << v);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (merged & (1u << i)) rows[i] |= 1u << u;
  }
  rows[u] = merged;
  return remove_vertex(rows, v);
}

bool has_clique(const Rows& rows, std::uint32_t candidates, std::size_t need) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(std::popcount(candidates)) < need) return false;
  while (candidates) {
    std::size_t v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (has_clique(rows, candidates & rows[v], need - 1)) return true;
  }
  return false;
}

Rows reduce(Rows rows, std::size_t ell) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < rows.size(); ++v) {
      int deg = std::popcount(rows[v]);
      if (deg <= 1 && ell >= 3) {
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] &= ~(1u << v);
        rows = remove_vertex(rows, v);
        changed = true;
        break;
      }
      if (deg == 2 && ell >= 4) {
        std::size_t a = std::countr_zero(rows[v]);
        rows = contract(rows, a, v);
        changed = true;
        break;
      }
    }
  }
  return rows;
}

class MinorSearch {
 public:
  explicit MinorSearch(std::size_t ell) : ell_(ell) {}

  bool run(Rows rows) {
    rows = reduce(std::move(rows), ell_);
    std::size_t n = rows.size();
    if (n < ell_) return false;
    if (edge_count(rows) < ell_ * (ell_ - 1) / 2) return false;
    std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    if (has_clique(rows, all, ell_)) return true;
    if (n == ell_) return false;
    std::string key(reinterpret_cast<const char*>(rows.data()), rows.size() * sizeof(std::uint32_t));
    if (!failed_.insert(std::move(key)).second) return false;
    for (std::size_t u = 0; u < n; ++u) {
      std::uint32_t higher = rows[u] & ~((2u << u) - 1);
      while (higher) {
        std::size_t v = std::countr_zero(higher);
        higher &= higher - 1;
        if (run(contract(rows, u, v))) return true;
      }
    }
    return false;
  }

 private:
  std::size_t ell_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

bool has_clique_minor(const Graph& g, std::size_t ell) {
  if (ell == 0) return true;
  if (ell == 1) return g.order() >= 1;
  if (ell == 2) return g.size() >= 1;
  if (ell == 3) {
    auto comp = components(g);
    std::size_t count = 0;
    for (std::size_t c : comp) count = std::max(count, c + 1);
    return g.size() + count > g.order();  // a forest has exactly n - c edges
  }

  std::vector<Vertex> live;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) live.push_back(v);
  if (live.size() > kCliqueMinorCeiling)
    throw CapacityError("clique-minor search supports at most " +
                        std::to_string(kCliqueMinorCeiling) + " non-isolated vertices, got " +
                        std::to_string(live.size()));
  Graph core = induced_subgraph(g, live);
  Rows rows(core.order(), 0);
  for (const Edge& e : core.edges()) {
    rows[e.u] |= 1u << e.v;
    rows[e.v] |= 1u << e.u;
  }
  MinorSearch search(ell);
  return search.run(std::move(rows));
}

}  // namespace msowb
