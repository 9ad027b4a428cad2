#pragma once

#include <vector>

#include "msowb/eval.hpp"
#include "msowb/grid.hpp"
#include "msowb/interp.hpp"
#include "msowb/strongcolor.hpp"

namespace msowb {

/// A labeled host graph encoding a subgraph H of the intersection graph of a
/// grid-like graph. H-vertex i is grid path `paths[i]` and is represented by
/// host vertex `representatives[i]`.
struct EncodingLabeling {
  LabeledGraph host;
  std::vector<std::size_t> paths;
  std::vector<Vertex> representatives;
  int colour_count = 0;
};

/// Alphabet light_1..light_c, dark_1..dark_c, w, b, m.
std::vector<std::string> encoding_alphabet(int colour_count);

/// A system of distinct representatives for the given paths (indices into
/// glg.paths): entry i lies on path path_indices[i] and all entries differ.
/// Augmenting-path matching, paths taken in the given order, each trying its
/// vertices from the lowest id up. Throws Error if no such system exists,
/// which cannot happen for a grid-like input.
std::vector<Vertex> select_representatives(const GridLikeGraph& glg,
                                           const std::vector<std::size_t>& path_indices);

/// The labeling lambda_H. Edges of white (black) paths of H are written as
/// light (dark) colour labels on both ends, representatives get w or b, and
/// every vertex shared by the two paths of an H-edge gets m. Throws
/// InvalidArgument if an H-edge joins two paths of one class or two disjoint
/// paths, or if the colouring is not strong.
EncodingLabeling build_labeling(const GridLikeGraph& glg, const PathSubgraph& h,
                                const EdgeColouring& colouring);

/// The interpretation decoding H: alpha = lab_w(x) | lab_b(x) and
/// beta_adj = E z. (lab_m(z) & rho(x,z) & rho(y,z)), with the connectivity
/// predicates con_w[c] and con_b[c] defined by a set quantifier.
Interpretation build_I2(int colour_count);

/// Named predicates of build_I2 that have native hooks.
std::vector<std::shared_ptr<const MacroDef>> i2_hooked_predicates(int colour_count);

/// con_w and con_b decided by connected components of the white (black) edges.
const HookRegistry& encoding_hooks();

/// H recovered from the labeling: G^{I2} renumbered so that vertex i is the
/// H-vertex represented there.
Graph decode(const EncodingLabeling& enc, const HookRegistry* hooks = &encoding_hooks());

}  // namespace msowb
