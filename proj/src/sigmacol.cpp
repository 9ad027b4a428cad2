#include "msowb/sigmacol.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "msowb/error.hpp"
#include "msowb/eval.hpp"

namespace msowb {

void validate(const QbfFormula& q) {
  if (q.variables < 0) throw InvalidArgument("negative variable count");
  if (q.blocks.empty() || q.blocks.size() % 2 == 0)
    throw InvalidArgument("number of quantifier blocks must be odd, got " +
                          std::to_string(q.blocks.size()));
  std::vector<int> seen(q.variables + 1, 0);
  for (std::size_t b = 0; b < q.blocks.size(); ++b) {
    if (q.blocks[b].existential != (b % 2 == 0))
      throw InvalidArgument("quantifier blocks must alternate starting existential");
    for (int x : q.blocks[b].variables) {
      if (x < 1 || x > q.variables) throw InvalidArgument("variable " + std::to_string(x) + " out of range");
      if (seen[x]++) throw InvalidArgument("variable " + std::to_string(x) + " quantified twice");
    }
  }
  for (int x = 1; x <= q.variables; ++x)
    if (!seen[x]) throw InvalidArgument("variable " + std::to_string(x) + " is not quantified");
  for (const auto& c : q.clauses)
    for (int l : c)
      if (l == 0 || std::abs(l) > q.variables)
        throw InvalidArgument("literal " + std::to_string(l) + " out of range");
}

bool evaluate_qbf(const QbfFormula& q) {
  validate(q);
  if (q.variables > kQbfVariableCeiling)
    throw CapacityError("QBF has " + std::to_string(q.variables) + " variables; ceiling is " +
                        std::to_string(kQbfVariableCeiling));
  std::vector<bool> value(q.variables + 1, false);
  auto matrix = [&] {
    for (const auto& c : q.clauses) {
      bool sat = false;
      for (int l : c) sat = sat || (value[std::abs(l)] == (l > 0));
      if (!sat) return false;
    }
    return true;
  };
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t b, std::size_t i) -> bool {
    if (b == q.blocks.size()) return matrix();
    const QbfBlock& block = q.blocks[b];
    if (i == block.variables.size()) return go(b + 1, 0);
    int x = block.variables[i];
    value[x] = false;
    bool a = go(b, i + 1);
    if (a == block.existential) return a;
    value[x] = true;
    return go(b, i + 1);
  };
  return go(0, 0);
}

void validate(const SigmaColInstance& inst) {
  if (inst.k < 1 || inst.k % 2 == 0) throw InvalidArgument("k must be odd and positive");
  if (inst.partition.size() != static_cast<std::size_t>(inst.k) + 1)
    throw InvalidArgument("partition must have k+1 blocks");
  const std::size_t n = inst.graph.order();
  std::vector<int> block(n, -1);
  for (std::size_t i = 0; i < inst.partition.size(); ++i)
    for (Vertex v : inst.partition[i]) {
      if (v >= n) throw InvalidArgument("partition vertex " + std::to_string(v) + " out of range");
      if (block[v] != -1) throw InvalidArgument("vertex " + std::to_string(v) + " in two blocks");
      block[v] = static_cast<int>(i);
    }
  for (Vertex v = 0; v < n; ++v)
    if (block[v] == -1) throw InvalidArgument("vertex " + std::to_string(v) + " in no block");
  if (inst.precolouring.size() != inst.partition[0].size())
    throw InvalidArgument("precolouring must be defined exactly on V0");
  for (const auto& [v, c] : inst.precolouring) {
    if (v >= n || block[v] != 0) throw InvalidArgument("precoloured vertex outside V0");
    if (c < 1 || c > 3) throw InvalidArgument("colours are 1, 2, 3");
  }
  for (const Edge& e : inst.graph.edges()) {
    auto a = inst.precolouring.find(e.u);
    auto b = inst.precolouring.find(e.v);
    if (a != inst.precolouring.end() && b != inst.precolouring.end() && a->second == b->second)
      throw InvalidArgument("precolouring is not proper on G[V0]");
  }
}

bool decide_alternating(const SigmaColInstance& inst) {
  validate(inst);
  std::size_t free = inst.graph.order() - inst.partition[0].size();
  if (free > kAlternatingCeiling)
    throw CapacityError(std::to_string(free) + " vertices to colour; ceiling is " +
                        std::to_string(kAlternatingCeiling));
  const Graph& g = inst.graph;
  std::vector<int> colour(g.order(), 0);
  for (const auto& [v, c] : inst.precolouring) colour[v] = c;

  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t b, std::size_t i) -> bool {
    if (b == inst.partition.size()) return true;
    const auto& block = inst.partition[b];
    if (i == block.size()) return go(b + 1, 0);
    const bool existential = b % 2 == 1;
    Vertex v = block[i];
    for (int c = 1; c <= 3; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbours(v)) clash = clash || colour[w] == c;
      if (clash) continue;
      colour[v] = c;
      bool r = go(b, i + 1);
      colour[v] = 0;
      if (r == existential) return r;
    }
    return !existential;
  };
  return go(1, 0);
}

Vertex literal_vertex(int literal) {
  if (literal == 0) throw InvalidArgument("literal 0");
  Vertex base = 3 + 2 * static_cast<Vertex>(std::abs(literal) - 1);
  return literal > 0 ? base : base + 1;
}

SigmaColInstance reduce_qsat_to_sigmacol(const QbfFormula& q) {
  validate(q);
  SigmaColInstance inst;
  inst.k = q.k();
  Graph& g = inst.graph;
  g = Graph(3 + 2 * static_cast<std::size_t>(q.variables));
  g.add_edge(kFalseVertex, kTrueVertex);
  g.add_edge(kFalseVertex, kForbidVertex);
  g.add_edge(kTrueVertex, kForbidVertex);
  inst.partition.assign(q.blocks.size() + 1, {});
  inst.partition[0] = {kFalseVertex, kTrueVertex, kForbidVertex};
  inst.precolouring = {{kFalseVertex, 1}, {kTrueVertex, 2}, {kForbidVertex, 3}};
  for (std::size_t b = 0; b < q.blocks.size(); ++b)
    for (int x : q.blocks[b].variables) {
      Vertex pos = literal_vertex(x);
      Vertex neg = literal_vertex(-x);
      g.add_edge(pos, neg);
      g.add_edge(pos, kForbidVertex);
      g.add_edge(neg, kForbidVertex);
      inst.partition[b + 1].push_back(pos);
      inst.partition[b + 1].push_back(neg);
    }
  auto& gadgets = inst.partition.back();
  auto fresh = [&] {
    Vertex v = g.add_vertex();
    gadgets.push_back(v);
    return v;
  };
  auto gate = [&](Vertex a, Vertex b) {
    Vertex p = fresh();
    Vertex r = fresh();
    Vertex o = fresh();
    g.add_edge(a, p);
    g.add_edge(b, r);
    g.add_edge(p, r);
    g.add_edge(p, o);
    g.add_edge(r, o);
    g.add_edge(o, kForbidVertex);
    return o;
  };
  for (const auto& clause : q.clauses) {
    if (clause.empty()) {
      Vertex z = fresh();
      g.add_edge(z, kFalseVertex);
      g.add_edge(z, kTrueVertex);
      g.add_edge(z, kForbidVertex);
      continue;
    }
    Vertex out = clause.size() == 1 ? gate(literal_vertex(clause[0]), literal_vertex(clause[0]))
                                    : gate(literal_vertex(clause[0]), literal_vertex(clause[1]));
    for (std::size_t j = 2; j < clause.size(); ++j) out = gate(out, literal_vertex(clause[j]));
    g.add_edge(out, kFalseVertex);
  }
  return inst;
}

bool check_reduction_structure(const QbfFormula& q, const SigmaColInstance& inst) {
  const Graph& g = inst.graph;
  if (g.order() < 3 + 2 * static_cast<std::size_t>(q.variables)) return false;
  if (!g.adjacent(kFalseVertex, kTrueVertex) || !g.adjacent(kFalseVertex, kForbidVertex) ||
      !g.adjacent(kTrueVertex, kForbidVertex))
    return false;
  const std::map<Vertex, int> f0 = {{kFalseVertex, 1}, {kTrueVertex, 2}, {kForbidVertex, 3}};
  if (inst.precolouring != f0) return false;
  for (int x = 1; x <= q.variables; ++x) {
    Vertex pos = literal_vertex(x);
    Vertex neg = literal_vertex(-x);
    if (!g.adjacent(pos, neg) || !g.adjacent(pos, kForbidVertex) || !g.adjacent(neg, kForbidVertex))
      return false;
  }
  return true;
}

HonestyReport reduction_honesty(const QbfFormula& q, const SigmaColInstance& inst, int exponent) {
  HonestyReport r;
  r.exponent = exponent;
  r.input_size = 2 + static_cast<std::size_t>(q.variables);
  for (const auto& c : q.clauses) r.input_size += c.size() + 1;
  r.output_size = inst.graph.order() + inst.graph.size();
  double in = static_cast<double>(r.input_size);
  double out = static_cast<double>(r.output_size);
  r.holds = std::pow(in, 1.0 / exponent) <= out && out <= std::pow(in, exponent);
  return r;
}

std::vector<std::string> sigmacol_alphabet(int k) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back("V" + std::to_string(i));
  out.insert(out.end(), {"R0", "G0", "B0"});
  return out;
}

LabeledGraph instance_to_labeled_graph(const SigmaColInstance& inst) {
  validate(inst);
  LabeledGraph out(inst.graph, sigmacol_alphabet(inst.k));
  for (std::size_t i = 1; i < inst.partition.size(); ++i)
    for (Vertex v : inst.partition[i]) out.add_label(v, "V" + std::to_string(i));
  static const char* kColour[] = {"", "R0", "G0", "B0"};
  for (const auto& [v, c] : inst.precolouring) out.add_label(v, kColour[c]);
  return out;
}

namespace {

std::string colour_set(char c, int i) { return std::string(1, c) + std::to_string(i); }

// R0(u) | u in R1 | ... | u in Ri
Formula accumulated(char c, int i, const std::string& u) {
  std::vector<Formula> parts{label(colour_set(c, 0), u)};
  for (int j = 1; j <= i; ++j) parts.push_back(member(u, colour_set(c, j)));
  return disjunction(parts);
}

std::vector<std::string> set_parameters(int i) {
  std::vector<std::string> out;
  for (int j = 1; j <= i; ++j)
    for (char c : {'R', 'G', 'B'}) out.push_back(colour_set(c, j));
  return out;
}

}  // namespace

Formula precol_formula(int i) {
  if (i < 1) throw InvalidArgument("Precol_i needs i >= 1");
  const std::string vi = "V" + std::to_string(i);
  Formula r = member("v", colour_set('R', i));
  Formula g = member("v", colour_set('G', i));
  Formula b = member("v", colour_set('B', i));
  // exactly one colour inside Vi, none outside
  Formula inside = (r && !g && !b) || (!r && g && !b) || (!r && !g && b);
  Formula partition =
      forall("v", (implies(label(vi, "v"), inside)) && implies(!label(vi, "v"), !r && !g && !b));
  std::vector<Formula> clashes;
  for (char c : {'R', 'G', 'B'})
    clashes.push_back(!(accumulated(c, i, "u") && accumulated(c, i, "w")));
  Formula proper = forall("u", forall("w", implies(adj("u", "w"), conjunction(clashes))));
  return partition && proper;
}

Formula sigmacol_formula(int k) {
  if (k < 1 || k % 2 == 0) throw InvalidArgument("sigma_k needs odd positive k, got " + std::to_string(k));
  Formula rest;
  for (int i = k; i >= 1; --i) {
    Formula body = i == k ? precol_formula(i)
                   : i % 2 == 1 ? precol_formula(i) && rest
                                : implies(precol_formula(i), rest);
    const std::string vi = "V" + std::to_string(i);
    for (char c : {'B', 'G', 'R'}) {
      Formula domain = label(vi, "v");
      body = i % 2 == 1 ? exists_within(colour_set(c, i), "v", domain, body)
                        : forall_within(colour_set(c, i), "v", domain, body);
    }
    rest = body;
  }
  return rest;
}

bool sigmacol_formula_holds(const LabeledGraph& g, int k) {
  if (k < 1 || k % 2 == 0) throw InvalidArgument("sigma_k needs odd positive k, got " + std::to_string(k));
  Structure s(g);
  Evaluator ev(s);
  std::vector<int> query;
  std::vector<std::vector<Vertex>> blocks(k + 1);
  for (int i = 1; i <= k; ++i) {
    query.push_back(ev.compile(precol_formula(i), {}, set_parameters(i)));
    int l = g.label_index("V" + std::to_string(i));
    for (Vertex v = 0; v < g.graph().order(); ++v)
      if (g.has_label(v, l)) blocks[i].push_back(v);
    if (blocks[i].size() > 16)
      throw CapacityError("block V" + std::to_string(i) + " has more than 16 vertices");
  }
  std::vector<std::vector<Vertex>> sets;  // R1 G1 B1 R2 ...
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i > k) return true;
    const bool existential = i % 2 == 1;
    const auto& block = blocks[i];
    std::vector<int> colour(block.size(), 0);
    while (true) {
      std::vector<Vertex> triple[3];
      for (std::size_t j = 0; j < block.size(); ++j) triple[colour[j]].push_back(block[j]);
      for (auto& t : triple) sets.push_back(t);
      bool pre = ev.holds(query[i - 1], {}, sets);
      bool value = existential ? pre && go(i + 1) : !pre || go(i + 1);
      sets.resize(sets.size() - 3);
      if (value == existential) return value;
      std::size_t j = 0;
      while (j < block.size() && colour[j] == 2) colour[j++] = 0;
      if (j == block.size()) break;
      ++colour[j];
    }
    return !existential;
  };
  return go(1);
}

}  // namespace msowb
