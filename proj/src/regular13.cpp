#include "msowb/regular13.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "msowb/error.hpp"
#include "msowb/parser.hpp"

namespace msowb {

Regular13Encoding encode_13regular(const Graph& f) {
  const std::vector<Edge> edges = f.edges();
  std::vector<std::vector<std::size_t>> incident(f.order());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].u].push_back(e);
    incident[edges[e].v].push_back(e);
  }

  Regular13Encoding out;
  out.i1 = build_I1();
  Graph& h = out.h;
  // slot[v][i] is the spine vertex of v carrying its i-th edge
  std::vector<std::vector<Vertex>> slot(f.order());
  for (Vertex v = 0; v < f.order(); ++v) {
    Vertex a = h.add_vertex();
    Vertex p = h.add_vertex();
    Vertex c = h.add_vertex();
    Vertex l1 = h.add_vertex();
    Vertex l2 = h.add_vertex();
    Vertex c2 = h.add_vertex();
    Vertex l3 = h.add_vertex();
    Vertex l4 = h.add_vertex();
    h.add_edge(p, a);
    h.add_edge(p, c);
    h.add_edge(c, l1);
    h.add_edge(c, l2);
    h.add_edge(c2, l3);
    h.add_edge(c2, l4);
    Vertex prev = p;
    for (std::size_t i = 0; i < incident[v].size(); ++i) {
      Vertex s = h.add_vertex();
      h.add_edge(prev, s);
      slot[v].push_back(s);
      prev = s;
    }
    h.add_edge(prev, c2);
    out.anchors.push_back(a);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    Vertex x = h.add_vertex();
    Vertex lx = h.add_vertex();
    Vertex y = h.add_vertex();
    Vertex ly = h.add_vertex();
    h.add_edge(x, y);
    h.add_edge(x, lx);
    h.add_edge(y, ly);
    auto position = [&](Vertex v) {
      auto& inc = incident[v];
      return static_cast<std::size_t>(std::find(inc.begin(), inc.end(), e) - inc.begin());
    };
    h.add_edge(x, slot[edges[e].u][position(edges[e].u)]);
    h.add_edge(y, slot[edges[e].v][position(edges[e].v)]);
  }
  return out;
}

namespace {

const char* kI1Definitions = R"(
def leaf(x) := E y. adj(x,y) & A z. adj(x,z) -> z = y;
def deg2(x) := E y. adj(x,y) & E z. adj(x,z) & ~y = z & A w. adj(x,w) -> w = y | w = z;
def chain(p, q) := deg2(p) & deg2(q) &
  A Z. (p in Z & (A u. A v. u in Z & adj(u,v) & deg2(u) & deg2(v) -> v in Z)) -> q in Z;
def topadj(u, v) := ~u = v & ~deg2(u) & ~deg2(v) &
  (adj(u,v) | E p. deg2(p) & adj(u,p) & E q. deg2(q) & adj(v,q) & chain(p,q));
def center(c) := ~leaf(c) & ~deg2(c) &
  (E a. leaf(a) & topadj(c,a) & E b. leaf(b) & topadj(c,b) & ~a = b);
def anchor(a) := leaf(a) & E p. topadj(a,p) & E c. topadj(p,c) & center(c);
def conn(x) := ~leaf(x) & ~deg2(x) & ~center(x) & (E l. leaf(l) & topadj(x,l)) &
  ~(E c. center(c) & topadj(x,c));
def inw(w) := deg2(w) | ~leaf(w) & ~center(w) & ~conn(w);
def samew(p, q) := inw(p) & inw(q) &
  A Z. (p in Z & (A u. A v. u in Z & adj(u,v) & inw(u) & inw(v) -> v in Z)) -> q in Z;
def attached(x, a) := E p. topadj(a,p) & E w. adj(x,w) & inw(w) & samew(w,p);
)";

const FormulaDocument& i1_definitions() {
  static const FormulaDocument doc = parse_document(std::string(kI1Definitions) + "true");
  return doc;
}

Formula i1_formula(const std::string& text) { return parse_document(text, i1_definitions().macros).formula; }

// Native evaluation of the I1 predicates on an arbitrary graph.
struct Topology {
  explicit Topology(const Structure& s) : n(s.order()) {
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = s.neighbours(v).size();
    leaf.resize(n);
    deg2.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      leaf[v] = deg[v] == 1;
      deg2[v] = deg[v] == 2;
    }
    chain_comp = components_within(s, deg2);

    top.resize(n);
    std::map<std::size_t, std::set<Vertex>> attach;  // deg-2 component -> non-deg-2 neighbours
    for (Vertex u = 0; u < n; ++u) {
      if (deg2[u]) continue;
      for (Vertex w : s.neighbours(u)) {
        if (deg2[w]) attach[chain_comp[w]].insert(u);
        else top[u].insert(w);
      }
    }
    for (const auto& [comp, ends] : attach)
      for (Vertex a : ends)
        for (Vertex b : ends)
          if (a != b) top[a].insert(b);

    center.resize(n);
    conn.resize(n);
    inw.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      if (leaf[v] || deg2[v]) continue;
      std::size_t leaves = 0;
      for (Vertex t : top[v]) leaves += leaf[t];
      center[v] = leaves >= 2;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (leaf[v] || deg2[v] || center[v]) continue;
      bool has_leaf = false;
      bool near_center = false;
      for (Vertex t : top[v]) {
        has_leaf = has_leaf || leaf[t];
        near_center = near_center || center[t];
      }
      conn[v] = has_leaf && !near_center;
    }
    for (Vertex v = 0; v < n; ++v) inw[v] = deg2[v] || (!leaf[v] && !center[v] && !conn[v]);
    w_comp = components_within(s, inw);
  }

  static std::vector<std::size_t> components_within(const Structure& s, const std::vector<bool>& in) {
    const std::size_t n = s.order();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::size_t next = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!in[v] || comp[v] != SIZE_MAX) continue;
      std::vector<Vertex> stack{v};
      comp[v] = next;
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : s.neighbours(u))
          if (in[w] && comp[w] == SIZE_MAX) {
            comp[w] = next;
            stack.push_back(w);
          }
      }
      ++next;
    }
    return comp;
  }

  std::size_t n;
  std::vector<bool> leaf, deg2, center, conn, inw;
  std::vector<std::size_t> chain_comp, w_comp;
  std::vector<std::set<Vertex>> top;
};

void require_undirected(const Structure& s) {
  if (s.directed()) throw EvalError("adj is not in the digraph signature; use arc");
}

}  // namespace

Interpretation build_I1() {
  Interpretation i;
  i.name = "I1";
  i.alpha = i1_formula("anchor(x)");
  i.beta_adj = i1_formula("E u. conn(u) & E v. conn(v) & topadj(u,v) & attached(u,x) & attached(v,y)");
  return i;
}

const HookRegistry& regular13_hooks() {
  static const HookRegistry registry = [] {
    HookRegistry r;
    r.add("chain", [](const Structure& s, int) -> HookFn {
      require_undirected(s);
      auto t = std::make_shared<Topology>(s);
      return [t](std::span<const Vertex> a) {
        return t->deg2[a[0]] && t->deg2[a[1]] && t->chain_comp[a[0]] == t->chain_comp[a[1]];
      };
    });
    r.add("topadj", [](const Structure& s, int) -> HookFn {
      require_undirected(s);
      auto t = std::make_shared<Topology>(s);
      return [t](std::span<const Vertex> a) { return t->top[a[0]].count(a[1]) > 0; };
    });
    r.add("samew", [](const Structure& s, int) -> HookFn {
      require_undirected(s);
      auto t = std::make_shared<Topology>(s);
      return [t](std::span<const Vertex> a) {
        return t->inw[a[0]] && t->inw[a[1]] && t->w_comp[a[0]] == t->w_comp[a[1]];
      };
    });
    return r;
  }();
  return registry;
}

std::vector<std::shared_ptr<const MacroDef>> i1_hooked_predicates() {
  std::vector<std::shared_ptr<const MacroDef>> out;
  for (const auto& m : i1_definitions().macros)
    if (regular13_hooks().find(m->name)) out.push_back(m);
  return out;
}

PathSubgraph embed_subdivision(const Graph& h, std::size_t rows, std::size_t cols) {
  if (h.order() > rows)
    throw CapacityError("vertex capacity: " + std::to_string(h.order()) +
                        " vertices do not fit into " + std::to_string(rows) + " rows");
  if (h.size() > cols)
    throw CapacityError("edge capacity: " + std::to_string(h.size()) +
                        " edges do not fit into " + std::to_string(cols) + " columns");
  PathSubgraph out;
  const std::vector<Edge> edges = h.edges();
  for (Vertex v = 0; v < h.order(); ++v) out.paths.push_back(v);
  for (std::size_t e = 0; e < edges.size(); ++e) out.paths.push_back(rows + e);
  out.graph = Graph(h.order() + edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out.graph.add_edge(edges[e].u, h.order() + e);
    out.graph.add_edge(edges[e].v, h.order() + e);
  }
  return out;
}

Graph suppress_degree_two(const Graph& g) {
  std::vector<std::set<Vertex>> adj(g.order());
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> alive(g.order(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!alive[v] || adj[v].size() != 2) continue;
      Vertex a = *adj[v].begin();
      Vertex b = *adj[v].rbegin();
      if (adj[a].count(b)) continue;
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a].insert(b);
      adj[b].insert(a);
      adj[v].clear();
      alive[v] = false;
      changed = true;
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (alive[v]) keep.push_back(v);
  std::vector<std::size_t> index(g.order(), SIZE_MAX);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  Graph out(keep.size());
  for (Vertex v : keep)
    for (Vertex w : adj[v])
      if (v < w) out.add_edge(index[v], index[w]);
  return out;
}

}  // namespace msowb
