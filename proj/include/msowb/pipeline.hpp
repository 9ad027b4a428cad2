#pragma once

#include <memory>
#include <string>
#include <vector>

#include "msowb/encoding.hpp"
#include "msowb/regular13.hpp"
#include "msowb/strongcolor.hpp"

namespace msowb {

/// Stand-in for the advice value: an explicit grid large enough for the
/// subdivision of h, with a strong edge colouring.
struct Advice {
  GridLikeGraph grid;
  EdgeColouring colouring;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Grid of max(2, |V(h)|) rows and max(2, |E(h)|) columns.
Advice build_advice(const Graph& h);

struct StageStats {
  std::string stage;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t formula_size = 0;
};

/// Everything built on the way from (f, phi) to the grid instance.
struct Provenance {
  Graph f;
  Formula phi;
  Regular13Encoding enc1;  // h, I1, anchors
  PathSubgraph h1;         // subdivision of h inside the grid's intersection graph
  Advice advice;
  EncodingLabeling enc2;
  Interpretation i2;
  Formula phi1;  // translate(phi, I1)
  std::vector<StageStats> stats;
};

struct ReducedInstance {
  LabeledGraph host;
  Formula psi;  // translate(translate(phi, I1), I2)
  std::shared_ptr<const Provenance> provenance;
};

/// f |= phi iff (host, labels) |= psi. Throws InvalidArgument unless phi is a
/// sentence without labels; capacity errors name the failing stage.
ReducedInstance reduce_instance(const Graph& f, const Formula& phi);

/// Decides host |= psi in two tiers: the graph host^I2 is recovered with the
/// connectivity hooks, then phi^I1 is evaluated on it with the I1 hooks.
/// Both hook sets must first agree with full expansion on their batteries
/// (checked once per colour count); otherwise Error is thrown. Throws Error if
/// provenance is missing or psi is not translate(phi1, i2).
bool check_reduced(const ReducedInstance& ri);

/// Hosts on which the connectivity hooks for `colour_count` colours are
/// compared with full expansion: the labelings of every path pair of the
/// 2x2 .. 2x5 and 3x3 grids, and 40 random labeled graphs on 6 to 10
/// vertices (fixed seed).
std::vector<LabeledGraph> encoding_hook_battery(int colour_count);
/// Every graph on at most 6 vertices and 40 random graphs on 7 to 10
/// vertices (fixed seed).
std::vector<LabeledGraph> regular13_hook_battery();

/// Runs both batteries (cached); true when no disagreement was found.
bool hooks_certified(int colour_count);

}  // namespace msowb
