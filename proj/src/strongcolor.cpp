#include "msowb/strongcolor.hpp"

#include <algorithm>
#include <vector>

#include "msowb/error.hpp"

namespace msowb {

int EdgeColouring::colour(const Edge& e) const {
  auto it = colours.find(e);
  if (it == colours.end())
    throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} is not coloured");
  return it->second;
}

int EdgeColouring::colour_count() const {
  int top = 0;
  for (const auto& [e, c] : colours) top = std::max(top, c);
  return top;
}

namespace {

// Edges at distance <= 1 from e: those touching an end of e or a neighbour of
// an end of e, excluding e itself.
std::vector<Edge> near_edges(const Graph& g, const Edge& e) {
  std::vector<Edge> out;
  for (Vertex end : {e.u, e.v}) {
    for (Vertex w : g.neighbours(end)) {
      out.emplace_back(end, w);
      for (Vertex z : g.neighbours(w)) out.emplace_back(w, z);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), e), out.end());
  return out;
}

void require_total(const Graph& g, const EdgeColouring& c) {
  for (const auto& [e, col] : c.colours)
    if (e.v >= g.order() || !g.adjacent(e.u, e.v))
      throw InvalidArgument("colouring names a non-edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}");
  if (c.colours.size() != g.size()) {
    for (const Edge& e : g.edges()) c.colour(e);  // throws on the first gap
  }
}

}  // namespace

EdgeColouring strong_edge_colour(const Graph& g) {
  EdgeColouring out;
  for (const Edge& e : g.edges()) {
    std::vector<bool> used;
    for (const Edge& f : near_edges(g, e)) {
      auto it = out.colours.find(f);
      if (it == out.colours.end()) continue;
      if (static_cast<std::size_t>(it->second) >= used.size()) used.resize(it->second + 1, false);
      used[it->second] = true;
    }
    int c = 1;
    while (static_cast<std::size_t>(c) < used.size() && used[c]) ++c;
    out.colours[e] = c;
  }
  return out;
}

std::optional<std::pair<Edge, Edge>> strong_conflict(const Graph& g, const EdgeColouring& c) {
  require_total(g, c);
  for (const Edge& e : g.edges()) {
    int ce = c.colours.at(e);
    for (const Edge& f : near_edges(g, e))
      if (e < f && c.colours.at(f) == ce) return std::make_pair(e, f);
  }
  return std::nullopt;
}

bool validate_strong(const Graph& g, const EdgeColouring& c) {
  return !strong_conflict(g, c).has_value();
}

bool key_observation_check(const Graph& g, const EdgeColouring& c, const std::set<Edge>& white) {
  std::vector<std::set<int>> w(g.order());
  for (const Edge& e : white) {
    int col = c.colour(e);
    w[e.u].insert(col);
    w[e.v].insert(col);
  }
  for (const Edge& e : g.edges()) {
    bool meet = std::any_of(w[e.u].begin(), w[e.u].end(),
                            [&](int col) { return w[e.v].count(col) > 0; });
    if (meet != (white.count(e) > 0)) return false;
  }
  return true;
}

}  // namespace msowb
