#include "msowb/encoding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "msowb/error.hpp"
#include "msowb/parser.hpp"

namespace msowb {

std::vector<std::string> encoding_alphabet(int colour_count) {
  std::vector<std::string> out;
  for (int i = 1; i <= colour_count; ++i) out.push_back("light_" + std::to_string(i));
  for (int i = 1; i <= colour_count; ++i) out.push_back("dark_" + std::to_string(i));
  out.insert(out.end(), {"w", "b", "m"});
  return out;
}

std::vector<Vertex> select_representatives(const GridLikeGraph& glg,
                                           const std::vector<std::size_t>& path_indices) {
  std::vector<std::vector<Vertex>> options;
  for (std::size_t p : path_indices) {
    if (p >= glg.paths.size()) throw InvalidArgument("path index out of range");
    std::vector<Vertex> vs = glg.paths[p];
    std::sort(vs.begin(), vs.end());
    options.push_back(std::move(vs));
  }
  std::vector<std::size_t> owner(glg.graph.order(), SIZE_MAX);
  std::vector<Vertex> chosen(path_indices.size(), SIZE_MAX);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (Vertex v : options[i]) {
      if (visited[v]) continue;
      visited[v] = true;
      if (owner[v] == SIZE_MAX || augment(owner[v])) {
        owner[v] = i;
        chosen[i] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < options.size(); ++i) {
    visited.assign(glg.graph.order(), false);
    if (!augment(i))
      throw Error("no system of distinct representatives: the input is not grid-like");
  }
  return chosen;
}

EncodingLabeling build_labeling(const GridLikeGraph& glg, const PathSubgraph& h,
                                const EdgeColouring& colouring) {
  if (h.graph.order() != h.paths.size())
    throw InvalidArgument("target graph order differs from its path list");
  std::set<std::size_t> distinct(h.paths.begin(), h.paths.end());
  if (distinct.size() != h.paths.size()) throw InvalidArgument("a path is listed twice");
  for (std::size_t p : h.paths)
    if (p >= glg.paths.size()) throw InvalidArgument("path index out of range");
  if (!validate_strong(glg.graph, colouring))
    throw InvalidArgument("the edge colouring is not strong");

  EncodingLabeling enc;
  enc.paths = h.paths;
  enc.colour_count = colouring.colour_count();
  enc.host = LabeledGraph(glg.graph, encoding_alphabet(enc.colour_count));

  for (std::size_t p : h.paths) {
    const Path& path = glg.paths[p];
    const char* prefix = glg.classes[p] == PathClass::White ? "light_" : "dark_";
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      std::string name = prefix + std::to_string(colouring.colour(Edge(path[k], path[k + 1])));
      enc.host.add_label(path[k], name);
      enc.host.add_label(path[k + 1], name);
    }
  }

  enc.representatives = select_representatives(glg, h.paths);
  for (std::size_t i = 0; i < h.paths.size(); ++i)
    enc.host.add_label(enc.representatives[i],
                       glg.classes[h.paths[i]] == PathClass::White ? "w" : "b");

  for (const Edge& e : h.graph.edges()) {
    std::size_t p1 = h.paths[e.u];
    std::size_t p2 = h.paths[e.v];
    if (glg.classes[p1] == glg.classes[p2])
      throw InvalidArgument("target edge joins two paths of the same class");
    std::vector<Vertex> a = glg.paths[p1];
    std::vector<Vertex> b = glg.paths[p2];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Vertex> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) throw InvalidArgument("target edge joins two disjoint paths");
    for (Vertex v : common) enc.host.add_label(v, "m");
  }
  return enc;
}

namespace {

std::string colour_test(const char* prefix, int c) {
  if (c == 0) return "false";
  std::string out;
  for (int i = 1; i <= c; ++i) {
    std::string l = std::string("lab_") + prefix + std::to_string(i);
    out += (i > 1 ? " | " : "") + l + "(u) & " + l + "(v)";
  }
  return out;
}

std::string i2_definitions(int c) {
  std::string p = "[" + std::to_string(c) + "]";
  return "def con_w" + p + "(t, z) := A Z. z in Z & ~t in Z -> E u. E v. v in Z & ~u in Z & adj(u,v) & (" +
         colour_test("light_", c) + ");\n" +
         "def con_b" + p + "(t, z) := A Z. z in Z & ~t in Z -> E u. E v. v in Z & ~u in Z & adj(u,v) & (" +
         colour_test("dark_", c) + ");\n" +
         "def rho(t, z) := (lab_w(t) -> con_w(t,z)) & (lab_b(t) -> con_b(t,z));\n";
}

HookFn component_hook(const Structure& s, int c, const char* prefix) {
  const std::size_t n = s.order();
  std::vector<int> labels;
  for (int i = 1; i <= c; ++i) {
    int idx = s.label_index(prefix + std::to_string(i));
    if (idx < 0) throw EvalError("unknown label '" + std::string(prefix) + std::to_string(i) + "'");
    labels.push_back(idx);
  }
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Vertex(Vertex)> root = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : s.neighbours(u)) {
      if (v < u) continue;
      bool coloured = std::any_of(labels.begin(), labels.end(), [&](int l) {
        return s.has_label(u, l) && s.has_label(v, l);
      });
      if (coloured) parent[root(u)] = root(v);
    }
  std::vector<Vertex> comp(n);
  for (Vertex v = 0; v < n; ++v) comp[v] = root(v);
  return [comp = std::move(comp)](std::span<const Vertex> a) { return comp[a[0]] == comp[a[1]]; };
}

}  // namespace

Interpretation build_I2(int colour_count) {
  FormulaDocument doc = parse_document(i2_definitions(colour_count) +
                                       "E z. lab_m(z) & rho(x,z) & rho(y,z)");
  Interpretation i;
  i.name = "I2";
  i.alpha = parse_formula("lab_w(x) | lab_b(x)");
  i.beta_adj = doc.formula;
  return i;
}

std::vector<std::shared_ptr<const MacroDef>> i2_hooked_predicates(int colour_count) {
  FormulaDocument doc = parse_document(i2_definitions(colour_count) + "true");
  std::vector<std::shared_ptr<const MacroDef>> out;
  for (const auto& m : doc.macros)
    if (encoding_hooks().find(m->name)) out.push_back(m);
  return out;
}

const HookRegistry& encoding_hooks() {
  static const HookRegistry registry = [] {
    HookRegistry r;
    r.add("con_w", [](const Structure& s, int c) { return component_hook(s, c, "light_"); });
    r.add("con_b", [](const Structure& s, int c) { return component_hook(s, c, "dark_"); });
    return r;
  }();
  return registry;
}

Graph decode(const EncodingLabeling& enc, const HookRegistry* hooks) {
  InducedStructure ind = induce(enc.host, build_I2(enc.colour_count), hooks);
  std::vector<std::size_t> index_of(enc.host.graph().order(), SIZE_MAX);
  for (std::size_t i = 0; i < enc.representatives.size(); ++i) index_of[enc.representatives[i]] = i;
  Graph out(enc.representatives.size());
  for (const Edge& e : ind.graph.graph().edges()) {
    std::size_t a = index_of[ind.domain[e.u]];
    std::size_t b = index_of[ind.domain[e.v]];
    if (a == SIZE_MAX || b == SIZE_MAX) throw Error("decoded a vertex that is no representative");
    out.add_edge(a, b);
  }
  return out;
}

}  // namespace msowb
