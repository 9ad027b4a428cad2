#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace oracle {

using msowb::Op;

namespace {

struct Host {
  const LabeledGraph* g = nullptr;
  const Digraph* d = nullptr;

  std::size_t order() const { return g ? g->graph().order() : d->order(); }
};

bool eval(const Host& h, const Formula& f, Env& env) {
  auto vertex = [&](const std::string& name) {
    auto it = env.v.find(name);
    if (it == env.v.end()) throw std::runtime_error("unbound " + name);
    return it->second;
  };
  switch (f.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Adj:
      if (!h.g) throw std::runtime_error("adj on a digraph");
      return h.g->graph().adjacent(vertex(f.first()), vertex(f.second()));
    case Op::Arc:
      if (!h.d) throw std::runtime_error("arc on a graph");
      return h.d->has_arc(vertex(f.first()), vertex(f.second()));
    case Op::Label: {
      if (!h.g || h.g->label_index(f.label()) < 0) throw std::runtime_error("unknown label");
      return h.g->has_label(vertex(f.first()), f.label());
    }
    case Op::Equal: return vertex(f.first()) == vertex(f.second());
    case Op::Member: {
      auto it = env.s.find(f.second());
      if (it == env.s.end()) throw std::runtime_error("unbound " + f.second());
      return it->second.count(vertex(f.first())) > 0;
    }
    case Op::Not: return !eval(h, f.child(0), env);
    case Op::And: return eval(h, f.child(0), env) && eval(h, f.child(1), env);
    case Op::Or: return eval(h, f.child(0), env) || eval(h, f.child(1), env);
    case Op::Implies: return !eval(h, f.child(0), env) || eval(h, f.child(1), env);
    case Op::Macro: {
      Env inner;
      const auto& def = *f.macro();
      for (std::size_t i = 0; i < def.formals.size(); ++i) inner.v[def.formals[i]] = vertex(f.arguments()[i]);
      return eval(h, def.body, inner);
    }
    case Op::Exists:
    case Op::Forall: {
      const bool want = f.op() == Op::Exists;
      const std::string& x = f.first();
      const std::size_t n = h.order();
      if (!f.binds_set()) {
        auto saved = env.v.find(x) == env.v.end() ? std::nullopt : std::optional<Vertex>(env.v[x]);
        bool result = !want;
        for (Vertex a = 0; a < n && result != want; ++a) {
          env.v[x] = a;
          if (eval(h, f.child(0), env) == want) result = want;
        }
        if (saved) env.v[x] = *saved;
        else env.v.erase(x);
        return result;
      }
      std::set<Vertex> domain;
      for (Vertex a = 0; a < n; ++a) {
        if (!f.has_domain()) {
          domain.insert(a);
          continue;
        }
        Env d = env;
        d.v[f.domain_variable()] = a;
        if (eval(h, f.domain(), d)) domain.insert(a);
      }
      auto saved = env.s.find(x) == env.s.end() ? std::nullopt : std::optional<std::set<Vertex>>(env.s[x]);
      bool result = !want;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && result != want; ++mask) {
        std::set<Vertex> s;
        bool inside = true;
        for (Vertex a = 0; a < n; ++a)
          if (mask >> a & 1) {
            s.insert(a);
            inside = inside && domain.count(a);
          }
        if (!inside) continue;
        env.s[x] = s;
        if (eval(h, f.child(0), env) == want) result = want;
      }
      if (saved) env.s[x] = *saved;
      else env.s.erase(x);
      return result;
    }
  }
  throw std::logic_error("unhandled node");
}

}  // namespace

bool holds(const LabeledGraph& g, const Formula& f, Env env) { return eval(Host{&g, nullptr}, f, env); }
bool holds(const Digraph& d, const Formula& f, Env env) { return eval(Host{nullptr, &d}, f, env); }

std::size_t node_count(const Formula& f) {
  if (f.op() == Op::Macro) return node_count(f.macro()->body);
  std::size_t n = 1;
  for (std::size_t i = 0; i < f.arity(); ++i) n += node_count(f.child(i));
  return n;
}

namespace {

class Generator {
 public:
  Generator(std::mt19937& rng, const FormulaShape& shape) : rng_(rng), shape_(shape) {}

  Formula run(int depth, std::vector<std::string> vs, std::vector<std::string> ss) {
    if (depth <= 0) return atom(vs, ss);
    int r = pick(10);
    if (vs.empty() && r >= 8) r = 5;
    switch (r) {
      case 0: return !run(depth - 1, vs, ss);
      case 1:
      case 2: return run(depth - 1, vs, ss) && run(depth - 1, vs, ss);
      case 3: return run(depth - 1, vs, ss) || run(depth - 1, vs, ss);
      case 4: return msowb::implies(run(depth - 1, vs, ss), run(depth - 1, vs, ss));
      case 5:
      case 6: {
        std::string x = kVertex[pick(4)];
        vs.push_back(x);
        Formula body = run(depth - 1, vs, ss);
        return pick(2) ? msowb::exists(x, body) : msowb::forall(x, body);
      }
      case 7: {
        if (!shape_.sets) return run(depth, vs, ss);
        std::string x = kSet[pick(3)];
        ss.push_back(x);
        Formula body = run(depth - 1, vs, ss);
        return pick(2) ? msowb::exists(x, body) : msowb::forall(x, body);
      }
      default: return atom(vs, ss);
    }
  }

 private:
  static constexpr const char* kVertex[] = {"x", "y", "z", "u"};
  static constexpr const char* kSet[] = {"X", "Y", "Z"};

  int pick(int k) { return static_cast<int>(rng_() % static_cast<unsigned>(k)); }
  const std::string& any(const std::vector<std::string>& v) { return v[pick(static_cast<int>(v.size()))]; }

  Formula atom(const std::vector<std::string>& vs, const std::vector<std::string>& ss) {
    if (vs.empty()) return pick(2) ? msowb::top() : msowb::bottom();
    while (true) {
      switch (pick(6)) {
        case 0:
        case 1:
          return shape_.directed ? msowb::arc(any(vs), any(vs)) : msowb::adj(any(vs), any(vs));
        case 2: return msowb::equal(any(vs), any(vs));
        case 3:
        case 4:
          if (!ss.empty()) return msowb::member(any(vs), any(ss));
          break;
        case 5:
          if (!shape_.labels.empty()) return msowb::label(any(shape_.labels), any(vs));
          break;
      }
    }
  }

  std::mt19937& rng_;
  const FormulaShape& shape_;
};

}  // namespace

Formula random_formula(std::mt19937& rng, const FormulaShape& shape, const std::vector<std::string>& free_vertices,
                       const std::vector<std::string>& free_sets) {
  Generator g(rng, shape);
  return g.run(shape.depth, free_vertices, free_sets);
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

LabeledGraph random_labeled_graph(std::mt19937& rng, std::size_t n, double p,
                                  const std::vector<std::string>& alphabet, double label_p) {
  LabeledGraph g(random_graph(rng, n, p), alphabet);
  std::bernoulli_distribution coin(label_p);
  for (Vertex v = 0; v < n; ++v)
    for (const auto& l : alphabet)
      if (coin(rng)) g.add_label(v, l);
  return g;
}

Graph random_bounded_degree_graph(std::mt19937& rng, std::size_t n, std::size_t max_degree, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  Graph g(n);
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : pairs)
    if (deg[u] < max_degree && deg[v] < max_degree && coin(rng)) {
      g.add_edge(u, v);
      ++deg[u];
      ++deg[v];
    }
  return g;
}

msowb::Interpretation random_interpretation(std::mt19937& rng, const std::vector<std::string>& host_labels,
                                            const std::vector<std::string>& target_labels, int depth) {
  FormulaShape shape;
  shape.depth = depth;
  shape.labels = host_labels;
  shape.sets = rng() % 3 == 0;
  msowb::Interpretation i;
  i.name = "R";
  i.alpha = random_formula(rng, shape, {"x"});
  // keep the domain non-trivial more often than not
  if (rng() % 2 && !host_labels.empty()) i.alpha = i.alpha || msowb::label(host_labels[0], "x");
  i.beta_adj = random_formula(rng, shape, {"x", "y"});
  for (const auto& l : target_labels) i.beta_labels[l] = random_formula(rng, shape, {"x"});
  return i;
}

std::vector<Graph> all_labelled_graphs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges())
      if (!b.adjacent(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::size_t class_count(std::size_t n) {
  std::vector<Graph> reps;
  for (const Graph& g : all_labelled_graphs(n)) {
    bool seen = false;
    for (const Graph& r : reps)
      if (isomorphic(g, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

bool clique_minor(const Graph& g, std::size_t ell) {
  const std::size_t n = g.order();
  if (ell == 0) return true;
  if (ell > n) return false;
  std::vector<std::size_t> block(n, 0);  // 0 = unused, 1..ell = branch set
  std::function<bool(std::size_t)> go = [&](std::size_t v) -> bool {
    if (v == n) {
      for (std::size_t b = 1; b <= ell; ++b) {
        std::vector<Vertex> members;
        for (Vertex u = 0; u < n; ++u)
          if (block[u] == b) members.push_back(u);
        if (members.empty()) return false;
        std::set<Vertex> reached{members[0]};
        std::vector<Vertex> stack{members[0]};
        while (!stack.empty()) {
          Vertex u = stack.back();
          stack.pop_back();
          for (Vertex w : g.neighbours(u))
            if (block[w] == b && reached.insert(w).second) stack.push_back(w);
        }
        if (reached.size() != members.size()) return false;
      }
      for (std::size_t a = 1; a <= ell; ++a)
        for (std::size_t b = a + 1; b <= ell; ++b) {
          bool joined = false;
          for (const auto& e : g.edges())
            if ((block[e.u] == a && block[e.v] == b) || (block[e.u] == b && block[e.v] == a)) joined = true;
          if (!joined) return false;
        }
      return true;
    }
    for (std::size_t b = 0; b <= ell; ++b) {
      block[v] = b;
      if (go(v + 1)) return true;
    }
    block[v] = 0;
    return false;
  };
  return go(0);
}

bool three_colourable(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> c(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t r = code;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<int>(r % 3);
      r /= 3;
    }
    bool ok = true;
    for (const auto& e : g.edges()) ok = ok && c[e.u] != c[e.v];
    if (ok) return true;
  }
  return false;
}

bool alternating_game(const msowb::SigmaColInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<int> colour(g.order(), 0);
  for (const auto& [v, c] : inst.precolouring) colour[v] = c;
  auto proper = [&] {
    for (const auto& e : g.edges())
      if (colour[e.u] && colour[e.u] == colour[e.v]) return false;
    return true;
  };
  std::function<bool(std::size_t)> block = [&](std::size_t i) -> bool {
    if (i == inst.partition.size()) return true;
    const auto& vs = inst.partition[i];
    const bool existential = i % 2 == 1;
    std::size_t total = 1;
    for (std::size_t j = 0; j < vs.size(); ++j) total *= 3;
    bool result = !existential;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t r = code;
      for (Vertex v : vs) {
        colour[v] = static_cast<int>(r % 3) + 1;
        r /= 3;
      }
      if (!proper()) continue;
      bool rest = block(i + 1);
      if (existential && rest) result = true;
      if (!existential && !rest) result = false;
    }
    for (Vertex v : vs) colour[v] = 0;
    return result;
  };
  return block(1);
}

bool qbf_value(const msowb::QbfFormula& q) {
  // truth table of the matrix, then fold out variables from the innermost one
  std::vector<int> order;
  for (const auto& b : q.blocks) order.insert(order.end(), b.variables.begin(), b.variables.end());
  std::vector<bool> existential;
  for (const auto& b : q.blocks)
    for (std::size_t i = 0; i < b.variables.size(); ++i) existential.push_back(b.existential);
  const std::size_t n = order.size();
  std::vector<char> table(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    // bit j of mask is the value of order[n-1-j]
    auto value = [&](int x) {
      std::size_t pos = std::find(order.begin(), order.end(), x) - order.begin();
      return (mask >> (n - 1 - pos) & 1) != 0;
    };
    bool all = true;
    for (const auto& c : q.clauses) {
      bool sat = false;
      for (int l : c) sat = sat || value(std::abs(l)) == (l > 0);
      all = all && sat;
    }
    table[mask] = all;
  }
  for (std::size_t j = n; j-- > 0;) {
    std::vector<char> next(table.size() / 2);
    for (std::size_t m = 0; m < next.size(); ++m)
      next[m] = existential[j] ? (table[2 * m] || table[2 * m + 1]) : (table[2 * m] && table[2 * m + 1]);
    table.swap(next);
  }
  return table[0];
}

bool edges_close(const Graph& g, const msowb::Edge& e, const msowb::Edge& f) {
  if (e == f) return false;
  for (Vertex a : {e.u, e.v})
    for (Vertex b : {f.u, f.v})
      if (a == b || g.adjacent(a, b)) return true;
  return false;
}

}  // namespace oracle
