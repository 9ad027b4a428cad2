#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "msowb/error.hpp"
#include "msowb/grid.hpp"
#include "msowb/strongcolor.hpp"
#include "oracle.hpp"

using namespace msowb;

namespace {

bool strong_by_oracle(const Graph& g, const EdgeColouring& c) {
  for (const Edge& e : g.edges())
    for (const Edge& f : g.edges())
      if (oracle::edges_close(g, e, f) && c.colours.at(e) == c.colours.at(f)) return false;
  return true;
}

// Least free colour per edge in lexicographic order, conflicts via edges_close.
std::map<Edge, int> greedy_by_oracle(const Graph& g) {
  std::map<Edge, int> out;
  for (const Edge& e : g.edges()) {
    std::set<int> used;
    for (const auto& [f, col] : out)
      if (oracle::edges_close(g, e, f)) used.insert(col);
    int col = 1;
    while (used.count(col)) ++col;
    out[e] = col;
  }
  return out;
}

}  // namespace

TEST_CASE("strong colouring examples") {
  CHECK(strong_edge_colour(complete_graph(3)).colour_count() == 3);
  CHECK(strong_edge_colour(path_graph(4)).colour_count() == 3);
  GridLikeGraph g = make_grid(4, 4);
  EdgeColouring c = strong_edge_colour(g.graph);
  CHECK(validate_strong(g.graph, c));
  CHECK(c.colour_count() <= 25);
  CHECK(c.colours == greedy_by_oracle(g.graph));
  CHECK(c.colour_count() == 10);
}

TEST_CASE("validate_strong") {
  Graph k3 = complete_graph(3);
  EdgeColouring c;
  c.colours = {{Edge(0, 1), 1}, {Edge(0, 2), 2}, {Edge(1, 2), 3}};
  CHECK(validate_strong(k3, c));

  Graph p4 = path_graph(4);
  EdgeColouring bad;
  bad.colours = {{Edge(0, 1), 1}, {Edge(1, 2), 2}, {Edge(2, 3), 1}};
  CHECK_FALSE(validate_strong(p4, bad));
  CHECK(strong_conflict(p4, bad) == std::make_pair(Edge(0, 1), Edge(2, 3)));

  EdgeColouring partial;
  partial.colours = {{Edge(0, 1), 1}};
  CHECK_THROWS_AS(validate_strong(p4, partial), InvalidArgument);
  partial.colours = {{Edge(0, 1), 1}, {Edge(1, 2), 2}, {Edge(2, 3), 3}, {Edge(0, 3), 4}};
  CHECK_THROWS_AS(validate_strong(p4, partial), InvalidArgument);
}

TEST_CASE("greedy output is strong on random graphs of degree at most four") {
  std::mt19937 rng(31);
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_bounded_degree_graph(rng, 2 + rng() % 29, 4, 0.3);
    EdgeColouring c = strong_edge_colour(g);
    REQUIRE(validate_strong(g, c));
    REQUIRE(strong_by_oracle(g, c));
    REQUIRE(c.colour_count() <= 25);
    REQUIRE(c.colours.size() == g.size());
  }
}

TEST_CASE("key observation on grid path classes") {
  for (std::size_t a = 2; a <= 6; ++a)
    for (std::size_t b = 2; b <= 6; ++b) {
      GridLikeGraph g = make_grid(a, b);
      EdgeColouring c = strong_edge_colour(g.graph);
      for (PathClass cls : {PathClass::White, PathClass::Black}) {
        std::set<Edge> white;
        for (std::size_t p = 0; p < g.paths.size(); ++p)
          if (g.classes[p] == cls)
            for (std::size_t k = 0; k + 1 < g.paths[p].size(); ++k) white.insert(Edge(g.paths[p][k], g.paths[p][k + 1]));
        REQUIRE(key_observation_check(g.graph, c, white));
      }
      CHECK(key_observation_check(g.graph, c, {}));
    }
}

TEST_CASE("merging colours can break the key observation") {
  // rows 0 and 1 of a 3x3 grid are white; giving 3-4 the colour of 0-1
  // makes the rung 0-3 look white
  GridLikeGraph g = make_grid(3, 3);
  EdgeColouring c = strong_edge_colour(g.graph);
  std::set<Edge> white{Edge(0, 1), Edge(1, 2), Edge(3, 4), Edge(4, 5)};
  REQUIRE(key_observation_check(g.graph, c, white));
  EdgeColouring weak = c;
  weak.colours[Edge(3, 4)] = c.colour(Edge(0, 1));
  CHECK_FALSE(validate_strong(g.graph, weak));
  CHECK_FALSE(key_observation_check(g.graph, weak, white));
}
