#pragma once

#include <memory>
#include <vector>

#include "msowb/eval.hpp"
#include "msowb/grid.hpp"
#include "msowb/interp.hpp"

namespace msowb {

/// A {1,3}-regular graph h with an interpretation i1 such that h^{i1} is the
/// source graph; F-vertex v is carried by h-vertex anchors[v].
struct Regular13Encoding {
  Graph h;
  Interpretation i1;
  std::vector<Vertex> anchors;
};

/// Builds one gadget per F-vertex and one connector per F-edge.
///
/// Gadget of a vertex v with d incident edges, numbered in this order:
///   a   anchor leaf, hanging from p
///   p   degree 3: a, c and the first spine vertex (c' when d = 0)
///   c   with leaves l1, l2
///   c'  with leaves l3, l4, closing the spine
///   s_1..s_d  the spine p - s_1 - ... - s_d - c'; s_i carries the i-th edge
///             of v in lexicographic edge order
/// Connector of an edge {u,v}: x - y, each with one leaf (x then lx, y then ly),
/// x joined to the spine slot of u and y to that of v.
///
/// |V(h)| = 8|V(F)| + 6|E(F)|.
Regular13Encoding encode_13regular(const Graph& f);

/// The interpretation shared by all encodings. Its predicates speak only
/// about leaves, degree-2 vertices and chains of degree-2 vertices, so
/// translated sentences do not notice subdivided edges.
Interpretation build_I1();

/// chain, topadj and samew decided by component computations.
const HookRegistry& regular13_hooks();

/// The predicates of build_I1 that have hooks.
std::vector<std::shared_ptr<const MacroDef>> i1_hooked_predicates();

/// The 1-subdivision of h as a subgraph of the intersection graph of
/// make_grid(rows, cols): h-vertex v is row v (path v) and the e-th edge of h
/// in lexicographic order is column e (path rows + e). In the result, vertex
/// v < |V(h)| is h-vertex v and vertex |V(h)| + e is edge e. Throws
/// CapacityError naming the violated bound when |V(h)| > rows or |E(h)| > cols.
PathSubgraph embed_subdivision(const Graph& h, std::size_t rows, std::size_t cols);

/// Suppresses every degree-2 vertex whose neighbours are not adjacent,
/// repeatedly; used to check that a graph is a subdivision of another.
Graph suppress_degree_two(const Graph& g);

}  // namespace msowb
