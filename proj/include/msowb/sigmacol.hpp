#pragma once

#include <map>
#include <vector>

#include "msowb/formula.hpp"
#include "msowb/graph.hpp"

namespace msowb {

struct QbfBlock {
  bool existential = true;
  std::vector<int> variables;  // 1-based
};

/// Prenex CNF: blocks[0] is existential and blocks alternate. Literals are
/// +x / -x for variables 1..variables.
struct QbfFormula {
  int variables = 0;
  std::vector<QbfBlock> blocks;
  std::vector<std::vector<int>> clauses;

  int k() const { return static_cast<int>(blocks.size()); }
};

/// Throws InvalidArgument unless every variable lies in exactly one block,
/// blocks alternate starting existential, their number is odd, and every
/// literal names a variable.
void validate(const QbfFormula& q);

inline constexpr int kQbfVariableCeiling = 20;

/// Truth value by exhaustive alternation. CapacityError above the ceiling.
bool evaluate_qbf(const QbfFormula& q);

/// An instance (G, f0, V0, V1, ..., Vk) of the k-alternating colouring game.
struct SigmaColInstance {
  Graph graph;
  std::vector<std::vector<Vertex>> partition;  // V0..Vk
  std::map<Vertex, int> precolouring;         // f0 : V0 -> {1,2,3}
  int k = 1;
};

/// Throws InvalidArgument unless k is odd, the partition has k+1 disjoint
/// blocks covering V(G), f0 is defined exactly on V0 with values in {1,2,3}
/// and properly colours G[V0].
void validate(const SigmaColInstance& inst);

/// Non-precoloured vertices decide_alternating accepts.
inline constexpr std::size_t kAlternatingCeiling = 64;

/// Whether a k-alternating colouring exists: some f1 on V1 keeps f0 u f1
/// proper and, if k > 1, every proper f2 on V2 leaves a (k-2)-alternating
/// colouring of the rest. Backtracking over each block in vertex order;
/// a partial assignment that cannot be completed properly is a dead end for
/// the existential player and vacuous for the universal one.
bool decide_alternating(const SigmaColInstance& inst);

/// Fixed vertices of reduce_qsat_to_sigmacol.
inline constexpr Vertex kFalseVertex = 0;   // f0 = 1
inline constexpr Vertex kTrueVertex = 1;    // f0 = 2
inline constexpr Vertex kForbidVertex = 2;  // f0 = 3

/// Vertex of literal +x or -x: v_x = 3 + 2(x-1), v_not_x = v_x + 1.
Vertex literal_vertex(int literal);

/// The colouring game of a QBF. A triangle on the fixed vertices; per
/// variable an edge between its two literal vertices, both joined to the
/// forbid vertex. A clause l1..lm becomes a chain of OR gadgets: OR(a,b)
/// adds p, q, o with edges a-p, b-q, p-q, p-o, q-o; the first gadget reads
/// l1 and l2, each later one the previous output and the next literal.
/// A unit clause uses OR(l, l). Every gadget output joins the forbid vertex
/// and the last one also the false vertex; an empty clause becomes one vertex
/// adjacent to all three fixed vertices. Literal vertices of block i go to
/// V_i, gadget vertices to V_k. Colour 2 reads as true.
SigmaColInstance reduce_qsat_to_sigmacol(const QbfFormula& q);

/// Triangle on the fixed vertices, f0 = (1,2,3) on them, and every literal
/// vertex adjacent to its complement and to the forbid vertex.
bool check_reduction_structure(const QbfFormula& q, const SigmaColInstance& inst);

struct HonestyReport {
  std::size_t input_size = 0;   // 2 + variables + sum over clauses of (|C| + 1)
  std::size_t output_size = 0;  // |V| + |E|
  int exponent = 3;
  bool holds = false;  // input^(1/b) <= output <= input^b
};
HonestyReport reduction_honesty(const QbfFormula& q, const SigmaColInstance& inst, int exponent = 3);

/// Labels V1..Vk for partition blocks and R0, G0, B0 for f0 = 1, 2, 3.
LabeledGraph instance_to_labeled_graph(const SigmaColInstance& inst);
std::vector<std::string> sigmacol_alphabet(int k);

/// Precol_i with free set variables R1,G1,B1..Ri,Gi,Bi: Ri,Gi,Bi partition
/// the vertices labelled Vi, and the accumulated colouring properly colours
/// the graph induced by V0..Vi.
Formula precol_formula(int i);

/// E R1 G1 B1 [Precol_1 & A R2 G2 B2 (Precol_2 -> E R3 G3 B3 ( ... ))], with
/// the block-i quantifiers ranging over subsets of the Vi-labelled vertices.
/// InvalidArgument for even or non-positive k.
Formula sigmacol_formula(int k);

/// The value of sigmacol_formula(k) on g, with each quantifier block
/// enumerated as the 3^|Vi| colourings of Vi (the only triples on which
/// Precol_i can hold) and Precol_i decided by the generic evaluator.
bool sigmacol_formula_holds(const LabeledGraph& g, int k);

}  // namespace msowb
