// Acceptance run: one PASS/FAIL line per criterion, exit status = failures.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "msowb/encoding.hpp"
#include "msowb/eval.hpp"
#include "msowb/interp.hpp"
#include "msowb/iso.hpp"
#include "msowb/parser.hpp"
#include "msowb/pipeline.hpp"
#include "msowb/regular13.hpp"
#include "msowb/sigmacol.hpp"
#include "msowb/strongcolor.hpp"
#include "oracle.hpp"

using namespace msowb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = secs < limit_seconds;
  bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %d %s: %s [%.1f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs, limit_seconds);
  std::fflush(stdout);
}

std::string ratio(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

// G^I computed with the naive evaluator only.
LabeledGraph oracle_induce(const LabeledGraph& host, const Interpretation& i) {
  std::vector<Vertex> dom;
  for (Vertex v = 0; v < host.graph().order(); ++v) {
    oracle::Env env;
    env.v[i.x] = v;
    if (oracle::holds(host, i.alpha, env)) dom.push_back(v);
  }
  Graph g(dom.size());
  for (std::size_t a = 0; a < dom.size(); ++a)
    for (std::size_t b = a + 1; b < dom.size(); ++b) {
      oracle::Env ab, ba;
      ab.v = {{i.x, dom[a]}, {i.y, dom[b]}};
      ba.v = {{i.x, dom[b]}, {i.y, dom[a]}};
      if (oracle::holds(host, i.beta_adj, ab) || oracle::holds(host, i.beta_adj, ba)) g.add_edge(a, b);
    }
  std::vector<std::string> alphabet;
  for (const auto& [l, beta] : i.beta_labels) alphabet.push_back(l);
  LabeledGraph out(std::move(g), alphabet);
  for (const auto& [l, beta] : i.beta_labels)
    for (std::size_t a = 0; a < dom.size(); ++a) {
      oracle::Env env;
      env.v[i.x] = dom[a];
      if (oracle::holds(host, beta, env)) out.add_label(a, l);
    }
  return out;
}

std::vector<Graph> graphs_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (Graph& g : graphs_up_to_isomorphism(k)) out.push_back(std::move(g));
  return out;
}

Outcome interpretation_soundness() {
  std::mt19937 rng(20261016);
  oracle::FormulaShape shape;
  shape.depth = 4;
  shape.labels = {"T"};
  const std::size_t total = 200;
  std::size_t good = 0;
  for (std::size_t t = 0; t < total; ++t) {
    LabeledGraph host = oracle::random_labeled_graph(rng, 1 + rng() % 8, 0.45, {"A", "B"}, 0.4);
    Interpretation i = oracle::random_interpretation(rng, {"A", "B"}, {"T"}, 2);
    Formula phi = oracle::random_formula(rng, shape);
    LabeledGraph target = oracle_induce(host, i);
    bool expected = oracle::holds(target, phi);
    bool ok = induced_structure(host, i) == target && evaluate(host, translate(phi, i)) == expected &&
              formula_size(translate(phi, i)) <= translation_size_bound(phi, i);
    good += ok;
  }
  return {good == total, ratio(good, total) + " random triples agree (hosts up to 8 vertices, depth 4)"};
}

Outcome encoding_round_trip() {
  std::size_t cases = 0, good = 0;
  std::set<int> colour_counts;
  for (std::size_t rows = 2; rows <= 4; ++rows)
    for (std::size_t cols = 2; cols <= 4; ++cols) {
      GridLikeGraph grid = make_grid(rows, cols);
      EdgeColouring c = strong_edge_colour(grid.graph);
      colour_counts.insert(c.colour_count());
      const std::size_t p = rows + cols;
      for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t q = 0; q < p; ++q)
          if (mask >> q & 1) chosen.push_back(q);
        if (chosen.size() > 4) continue;
        // white paths are 0..rows-1, and every white path crosses every black one
        std::vector<Edge> crossing;
        for (std::size_t a = 0; a < chosen.size(); ++a)
          for (std::size_t b = a + 1; b < chosen.size(); ++b)
            if ((chosen[a] < rows) != (chosen[b] < rows)) crossing.emplace_back(a, b);
        for (std::uint32_t emask = 0; emask < (1u << crossing.size()); ++emask) {
          if (std::popcount(emask) > 4) continue;
          PathSubgraph h{chosen, Graph(chosen.size())};
          for (std::size_t e = 0; e < crossing.size(); ++e)
            if (emask >> e & 1) h.graph.add_edge(crossing[e].u, crossing[e].v);
          EncodingLabeling enc = build_labeling(grid, h, c);
          Graph back = decode(enc);
          bool ok = back == h.graph && oracle::isomorphic(back, h.graph);
          // full expansion is affordable on the smallest hosts
          if (grid.graph.order() <= 6) ok = ok && decode(enc, nullptr) == h.graph;
          ++cases;
          good += ok;
        }
      }
    }
  std::size_t hosts = 0, mismatches = 0;
  for (int c : colour_counts) {
    auto battery = encoding_hook_battery(c);
    hosts += battery.size();
    mismatches += hook_conformance(encoding_hooks(), i2_hooked_predicates(c), battery).size();
  }
  return {good == cases && mismatches == 0,
          ratio(good, cases) + " labelings decode to h on grids 2x2..4x4; hook conformance " +
              std::to_string(mismatches) + " disagreements on " + std::to_string(hosts) +
              " hosts of at most 10 vertices"};
}

Outcome strong_colouring() {
  std::mt19937 rng(7);
  std::size_t good = 0;
  int palette = 0;
  const std::size_t total = 200;
  for (std::size_t t = 0; t < total; ++t) {
    Graph g = oracle::random_bounded_degree_graph(rng, 2 + rng() % 29, 4, 0.3);
    EdgeColouring c = strong_edge_colour(g);
    bool ok = validate_strong(g, c);
    for (const Edge& e : g.edges())
      for (const Edge& f : g.edges())
        if (e < f && oracle::edges_close(g, e, f) && c.colours.at(e) == c.colours.at(f)) ok = false;
    palette = std::max(palette, c.colour_count());
    good += ok && c.colour_count() <= 25;
  }
  std::size_t classes = 0, held = 0;
  for (std::size_t rows = 2; rows <= 6; ++rows)
    for (std::size_t cols = 2; cols <= 6; ++cols) {
      GridLikeGraph grid = make_grid(rows, cols);
      EdgeColouring c = strong_edge_colour(grid.graph);
      for (PathClass cls : {PathClass::White, PathClass::Black}) {
        std::set<Edge> white;
        for (std::size_t q = 0; q < grid.paths.size(); ++q)
          if (grid.classes[q] == cls)
            for (std::size_t j = 0; j + 1 < grid.paths[q].size(); ++j)
              white.insert(Edge(grid.paths[q][j], grid.paths[q][j + 1]));
        ++classes;
        held += key_observation_check(grid.graph, c, white);
      }
    }
  return {good == total && held == classes,
          ratio(good, total) + " greedy colourings strong (largest palette " + std::to_string(palette) +
              " <= 25); key observation " + ratio(held, classes) + " path classes up to 6x6"};
}

Outcome regular13_contract() {
  const HookRegistry& hooks = regular13_hooks();
  std::size_t mismatches = hook_conformance(hooks, i1_hooked_predicates(), regular13_hook_battery()).size();
  std::size_t total = 0, good = 0, five = 0;
  for (const Graph& f : graphs_up_to(5)) {
    Regular13Encoding enc = encode_13regular(f);
    InducedStructure s = induce(LabeledGraph(enc.h), enc.i1, &hooks);
    bool ok = is_13_regular(enc.h) && oracle::isomorphic(s.graph.graph(), f) && s.domain == enc.anchors;
    ++total;
    good += ok;
    five += f.order() == 5;
  }
  std::mt19937 rng(36);
  oracle::FormulaShape shape;
  shape.depth = 3;
  const std::size_t triples = 100;
  std::size_t invariant = 0;
  for (std::size_t t = 0; t < triples; ++t) {
    Graph f = oracle::random_graph(rng, 1 + rng() % 4, 0.5);
    Formula phi = oracle::random_formula(rng, shape);
    Regular13Encoding enc = encode_13regular(f);
    std::map<Edge, std::size_t> plan;
    for (const Edge& e : enc.h.edges()) plan[e] = rng() % 3;
    Graph sub = subdivide(enc.h, plan);
    Formula phi1 = translate(phi, enc.i1);
    bool expected = oracle::holds(LabeledGraph(f), phi);
    invariant += evaluate(enc.h, phi1, {}, &hooks) == expected && evaluate(sub, phi1, {}, &hooks) == expected;
  }
  return {good == total && invariant == triples && mismatches == 0,
          ratio(good, total) + " graphs up to 5 vertices (" + std::to_string(five) +
              " classes on 5) recovered from h; subdivision invariance " + ratio(invariant, triples) +
              "; hook conformance " + std::to_string(mismatches) + " disagreements"};
}

Outcome end_to_end() {
  std::size_t total = 0, good = 0;
  for (const std::string& text : fixtures::sentences()) {
    Formula phi = parse_formula(text);
    for (const Graph& f : graphs_up_to_isomorphism(4)) {
      bool direct = oracle::holds(LabeledGraph(f), phi);
      bool reduced = check_reduced(reduce_instance(f, phi));
      ++total;
      good += direct == reduced && direct == evaluate(f, phi);
    }
  }
  return {good == total && total == 44, ratio(good, total) + " (graph, sentence) pairs on 4 vertices agree"};
}

QbfFormula random_qbf(std::mt19937& rng, int k) {
  QbfFormula q;
  q.variables = 1 + static_cast<int>(rng() % 6);
  q.blocks.assign(k, {});
  for (int b = 0; b < k; ++b) q.blocks[b].existential = b % 2 == 0;
  for (int x = 1; x <= q.variables; ++x) q.blocks[rng() % k].variables.push_back(x);
  int clauses = static_cast<int>(rng() % 5);
  for (int c = 0; c < clauses; ++c) {
    std::vector<int> clause;
    int len = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < len; ++j) {
      int x = 1 + static_cast<int>(rng() % q.variables);
      clause.push_back(rng() % 2 ? x : -x);
    }
    q.clauses.push_back(clause);
  }
  return q;
}

// Every QBF on one or two variables with at most two clauses of at most two
// literals, over every prefix with k = 1 or 3 blocks.
std::vector<QbfFormula> tiny_qbfs() {
  std::vector<QbfFormula> out;
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::vector<int>> universe;
    std::vector<int> lits;
    for (int x = 1; x <= n; ++x) {
      lits.push_back(x);
      lits.push_back(-x);
    }
    for (std::size_t a = 0; a < lits.size(); ++a) {
      universe.push_back({lits[a]});
      for (std::size_t b = a + 1; b < lits.size(); ++b) universe.push_back({lits[a], lits[b]});
    }
    std::vector<std::vector<std::vector<int>>> matrices{{}};
    for (std::size_t a = 0; a < universe.size(); ++a) {
      matrices.push_back({universe[a]});
      for (std::size_t b = a; b < universe.size(); ++b) matrices.push_back({universe[a], universe[b]});
    }
    for (int k : {1, 3}) {
      int prefixes = 1;
      for (int x = 0; x < n; ++x) prefixes *= k;
      for (int p = 0; p < prefixes; ++p) {
        QbfFormula q;
        q.variables = n;
        q.blocks.assign(k, {});
        for (int b = 0; b < k; ++b) q.blocks[b].existential = b % 2 == 0;
        int rest = p;
        for (int x = 1; x <= n; ++x) {
          q.blocks[rest % k].variables.push_back(x);
          rest /= k;
        }
        for (const auto& m : matrices) {
          q.clauses = m;
          out.push_back(q);
        }
      }
    }
  }
  out.push_back(QbfFormula{1, {{true, {1}}}, {{1}, {}}});
  return out;
}

Outcome qbf_reduction() {
  std::mt19937 rng(53);
  std::vector<QbfFormula> all;
  for (int t = 0; t < 300; ++t) all.push_back(random_qbf(rng, t % 2 ? 3 : 1));
  const std::size_t random_count = all.size();
  for (auto& q : tiny_qbfs()) all.push_back(std::move(q));
  std::size_t good = 0, f0_ok = 0;
  for (const QbfFormula& q : all) {
    SigmaColInstance inst = reduce_qsat_to_sigmacol(q);
    bool value = oracle::qbf_value(q);
    good += evaluate_qbf(q) == value && decide_alternating(inst) == value && check_reduction_structure(q, inst) &&
            reduction_honesty(q, inst).holds;
    f0_ok += inst.precolouring.at(kFalseVertex) == 1 && inst.precolouring.at(kTrueVertex) == 2 &&
             inst.precolouring.at(kForbidVertex) == 3;
  }
  return {good == all.size() && f0_ok == all.size(),
          ratio(good, all.size()) + " QBFs agree (" + std::to_string(random_count) + " random, " +
              std::to_string(all.size() - random_count) + " exhaustive tiny); f0 = (1,2,3) on " +
              ratio(f0_ok, all.size())};
}

// Calls visit for every instance on g with blocks V0..Vk and every proper f0.
void for_each_instance(const Graph& g, int k, const std::function<void(const SigmaColInstance&)>& visit) {
  const std::size_t n = g.order();
  std::vector<int> block(n, 0);
  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (v == n) {
      SigmaColInstance inst;
      inst.graph = g;
      inst.k = k;
      inst.partition.assign(k + 1, {});
      for (Vertex w = 0; w < n; ++w) inst.partition[block[w]].push_back(w);
      const auto& v0 = inst.partition[0];
      std::size_t colourings = 1;
      for (std::size_t j = 0; j < v0.size(); ++j) colourings *= 3;
      for (std::size_t c = 0; c < colourings; ++c) {
        inst.precolouring.clear();
        std::size_t rest = c;
        for (Vertex w : v0) {
          inst.precolouring[w] = 1 + static_cast<int>(rest % 3);
          rest /= 3;
        }
        bool proper = true;
        for (const Edge& e : g.edges())
          if (inst.precolouring.count(e.u) && inst.precolouring.count(e.v) &&
              inst.precolouring[e.u] == inst.precolouring[e.v])
            proper = false;
        if (proper) visit(inst);
      }
      return;
    }
    for (int b = 0; b <= k; ++b) {
      block[v] = b;
      place(v + 1);
    }
  };
  place(0);
}

Outcome sigma_formula() {
  Formula s1 = sigmacol_formula(1);
  Formula s3 = sigmacol_formula(3);
  std::size_t total1 = 0, good1 = 0;
  for (const Graph& g : graphs_up_to(6))
    for_each_instance(g, 1, [&](const SigmaColInstance& inst) {
      LabeledGraph lg = instance_to_labeled_graph(inst);
      bool game = decide_alternating(inst);
      ++total1;
      good1 += sigmacol_formula_holds(lg, 1) == game && evaluate(lg, s1) == game;
    });
  Formula col = parse_formula(fixtures::kThreeColour);
  std::size_t total_col = 0, good_col = 0;
  for (const Graph& g : graphs_up_to(6)) {
    SigmaColInstance inst;
    inst.graph = g;
    inst.partition = {{}, {}};
    for (Vertex v = 0; v < g.order(); ++v) inst.partition[1].push_back(v);
    LabeledGraph lg = instance_to_labeled_graph(inst);
    bool expected = oracle::three_colourable(g);
    ++total_col;
    good_col += evaluate(g, col) == expected && evaluate(lg, s1) == expected && sigmacol_formula_holds(lg, 1) == expected;
  }
  std::size_t total3 = 0, good3 = 0;
  for (const Graph& g : graphs_up_to(4))
    for_each_instance(g, 3, [&](const SigmaColInstance& inst) {
      LabeledGraph lg = instance_to_labeled_graph(inst);
      bool game = oracle::alternating_game(inst);
      ++total3;
      good3 += sigmacol_formula_holds(lg, 3) == game && decide_alternating(inst) == game && evaluate(lg, s3) == game;
    });
  bool alphabet = true;
  for (int k : {1, 3, 5, 7}) {
    auto a = sigmacol_alphabet(k);
    std::set<std::string> used = labels_used(sigmacol_formula(k));
    alphabet = alphabet && a.size() == static_cast<std::size_t>(k) + 3 &&
               std::all_of(used.begin(), used.end(),
                           [&](const std::string& l) { return std::find(a.begin(), a.end(), l) != a.end(); });
  }
  return {good1 == total1 && good_col == total_col && good3 == total3 && alphabet,
          "sigma_1 " + ratio(good1, total1) + " instances up to 6 vertices; V0 empty vs 3-colouring " +
              ratio(good_col, total_col) + " graphs; sigma_3 " + ratio(good3, total3) +
              " instances up to 4 vertices; alphabet k+3 " + (alphabet ? "yes" : "no")};
}

Outcome directed_adapter() {
  std::size_t total = 0, good = 0;
  for (const std::string& text : fixtures::sentences()) {
    Formula phi = parse_formula(text);
    Formula directed = to_directed_formula(phi);
    const bool colouring = text == fixtures::kThreeColour;
    for (const Graph& g : graphs_up_to(6)) {
      bool want = colouring ? oracle::three_colourable(g) : oracle::holds(LabeledGraph(g), phi);
      if (evaluate(g, phi) != want) {
        ++total;
        continue;
      }
      auto edges = g.edges();
      for (std::uint32_t m = 0; m < (1u << edges.size()); ++m) {
        Digraph d(g.order());
        for (std::size_t j = 0; j < edges.size(); ++j) {
          if (m >> j & 1) d.add_arc(edges[j].u, edges[j].v);
          else d.add_arc(edges[j].v, edges[j].u);
        }
        ++total;
        good += evaluate(d, directed) == want;
      }
    }
  }
  return {good == total, ratio(good, total) + " (graph, orientation, sentence) triples up to 6 vertices agree"};
}

}  // namespace

int main() {
  criterion(1, "interpretation soundness", 300, interpretation_soundness);
  criterion(2, "labeling round trip and hook conformance", 600, encoding_round_trip);
  criterion(3, "strong edge colouring", 600, strong_colouring);
  criterion(4, "{1,3}-regular encoding contract", 600, regular13_contract);
  criterion(5, "end-to-end reduction", 1800, end_to_end);
  criterion(6, "QBF to alternating colouring reduction", 600, qbf_reduction);
  criterion(7, "sigma_k formula", 1200, sigma_formula);
  criterion(8, "directed adapter", 1200, directed_adapter);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
