#pragma once

#include <cstddef>

#include "msowb/graph.hpp"

namespace msowb {

/// Largest input accepted by has_clique_minor.
inline constexpr std::size_t kCliqueMinorCeiling = 14;

/// True iff g has ell disjoint connected vertex sets that are pairwise joined
/// by an edge.
///
/// Depth-first search over contraction sequences with memoisation of visited
/// contractions. Every state is first reduced: vertices of degree <= 1 are
/// dropped (ell >= 3) and degree-2 vertices suppressed (ell >= 4), neither of
/// which changes the answer. ell <= 3 is decided directly (an edge, a cycle).
/// Otherwise inputs with more than kCliqueMinorCeiling vertices
/// (after removing isolated vertices) raise CapacityError.
bool has_clique_minor(const Graph& g, std::size_t ell);

}  // namespace msowb
