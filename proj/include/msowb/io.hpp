#pragma once

#include <string>

#include "msowb/grid.hpp"
#include "msowb/interp.hpp"
#include "msowb/pipeline.hpp"
#include "msowb/sigmacol.hpp"
#include "msowb/strongcolor.hpp"

namespace msowb {

// Line-based text formats. Blank lines and `#` comments are ignored; every
// reader throws FormatError naming the offending line.
//
//   graph N          e U V           (undirected graph on 0..N-1)
//   digraph N        a U V           (arcs)
//   alphabet L...    l V L1,L2,...   (labels; optional after a graph)
//   p white|black V1 V2 ...          (paths of a grid-like graph)
//   c U V COLOUR                     (edge colouring)
//   k K   part I V...   f0 V COLOUR  (alternating colouring instance)

std::string write_graph(const Graph& g);
Graph read_graph(const std::string& text);

std::string write_digraph(const Digraph& d);
Digraph read_digraph(const std::string& text);

std::string write_labeled_graph(const LabeledGraph& g);
LabeledGraph read_labeled_graph(const std::string& text);

std::string write_grid_like(const GridLikeGraph& g);
GridLikeGraph read_grid_like(const std::string& text);

std::string write_colouring(const EdgeColouring& c);
EdgeColouring read_colouring(const std::string& text);

std::string write_instance(const SigmaColInstance& inst);
SigmaColInstance read_instance(const std::string& text);

/// `p cnf V C`, then `e`/`a` lines ending in 0, then clauses ending in 0.
/// Variables in no quantifier line join an outermost existential block,
/// adjacent blocks of one kind merge, and empty existential blocks are added
/// so that the prefix starts and ends existentially.
std::string write_qdimacs(const QbfFormula& q);
QbfFormula read_qdimacs(const std::string& text);

/// Definitions first, then `name: N`, `vars: X Y`, `alpha: F`,
/// `beta_adj: F` and one `beta_lab_L: F` line per label.
std::string write_interpretation(const Interpretation& i);
Interpretation read_interpretation(const std::string& text);

/// `anchor V H` per source vertex.
std::string write_anchors(const std::vector<Vertex>& anchors);

/// The files of a reduced instance, keyed by file name: host.txt, psi.txt,
/// phi1.txt, i1.txt, i2.txt, source.txt, phi.txt, anchors.txt, h.txt,
/// h1.txt and stats.txt.
std::vector<std::pair<std::string, std::string>> write_reduced(const ReducedInstance& ri);
/// Rebuilds an instance checkable by check_reduced from host.txt, psi.txt,
/// phi1.txt and i2.txt.
ReducedInstance read_reduced(const std::map<std::string, std::string>& files);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace msowb
