#include "msowb/eval.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "msowb/error.hpp"

namespace msowb {

namespace {

using Bits = std::vector<std::uint64_t>;

// Above this order the structure answers adjacency from sorted neighbour
// lists instead of a bit matrix.
constexpr std::size_t kMatrixCeiling = 16384;

}  // namespace

Structure::Structure(const LabeledGraph& g) : labeled_(&g), n_(g.graph().order()) {
  neighbours_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) neighbours_[v] = g.graph().neighbours(v);
  if (n_ <= kMatrixCeiling) {
    words_ = (n_ + 63) / 64;
    rows_.assign(n_ * words_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : neighbours_[v]) rows_[v * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
  }
}

Structure::Structure(const Digraph& d) : digraph_(&d), n_(d.order()) {
  neighbours_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) {
    auto& nb = neighbours_[v];
    nb = d.successors(v);
    nb.insert(nb.end(), d.predecessors(v).begin(), d.predecessors(v).end());
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  if (n_ <= kMatrixCeiling) {
    words_ = (n_ + 63) / 64;
    rows_.assign(n_ * words_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : d.successors(v)) rows_[v * words_ + w / 64] |= std::uint64_t{1} << (w % 64);
  }
}

bool Structure::adjacent(Vertex u, Vertex v) const {
  if (digraph_) return arc(u, v) || arc(v, u);
  if (!rows_.empty()) return bit(u, v);
  return labeled_->graph().adjacent(u, v);
}

bool Structure::arc(Vertex u, Vertex v) const {
  if (!digraph_) return false;
  if (!rows_.empty()) return bit(u, v);
  return digraph_->has_arc(u, v);
}

int Structure::label_index(const std::string& name) const {
  return labeled_ ? labeled_->label_index(name) : -1;
}

bool Structure::has_label(Vertex v, int index) const {
  return labeled_ && labeled_->has_label(v, index);
}

const HookFactory* HookRegistry::find(const std::string& name) const {
  auto it = hooks_.find(name);
  return it == hooks_.end() ? nullptr : &it->second;
}

std::vector<std::string> HookRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, factory] : hooks_) out.push_back(name);
  return out;
}

namespace {

struct Unit;

struct Node {
  Op op = Op::True;
  int a = -1;
  int b = -1;
  int label = -1;
  std::vector<Node*> kids;
  std::vector<int> free_v;
  std::vector<int> free_s;

  // Quantifiers. A vertex quantifier checks `rest` (and, for A, the
  // consequent) on candidates drawn from the guard set or from the neighbours
  // of the anchor.
  int var = -1;
  bool set_quantifier = false;
  std::vector<Node*> guards;
  std::vector<Node*> rest;
  Node* consequent = nullptr;
  int anchor = -1;
  bool guards_ready = false;
  std::vector<Vertex> guard_list;
  Bits guard_bits;
  Node* domain = nullptr;
  int domain_var = -1;
  bool domain_ready = false;
  std::vector<Vertex> domain_list;
  // Set quantifiers of one kind directly nested in this one, outermost first,
  // and per vertex of their domains the block positions it may join.
  std::vector<Node*> block;
  std::vector<std::pair<Vertex, std::vector<int>>> steps;

  bool memo = false;
  signed char memo0 = -1;
  std::vector<signed char> memo1;
  std::unordered_map<std::uint64_t, bool> memo2;

  Unit* unit = nullptr;
  std::vector<int> args;
};

struct Frame {
  std::vector<Vertex> v;
  std::vector<Bits> s;
  // While a set block is searched, known[i] marks the vertices whose
  // membership in set i is decided; partial[i] says the search is running.
  std::vector<Bits> known;
  std::vector<char> partial;

  void size_sets(std::size_t slots, std::size_t words) {
    s.assign(slots, Bits(words, 0));
    known.assign(slots, Bits(words, 0));
    partial.assign(slots, 0);
  }
};

// Kleene truth values.
enum Tri : int { kFalse = 0, kTrue = 1, kUnknown = 2 };

struct Unit {
  const MacroDef* def = nullptr;
  Node* root = nullptr;
  Frame frame;
  const HookFactory* factory = nullptr;
  bool hook_ready = false;
  HookFn hook;
  std::unordered_map<std::uint64_t, bool> memo;
};

struct Query {
  Node* root = nullptr;
  Frame frame;
  std::size_t vparams = 0;
  std::size_t sparams = 0;
};

struct Scope {
  std::map<std::string, std::vector<int>> names;
  int vslots = 0;
  int sslots = 0;

  int bind_vertex(const std::string& name) {
    names[name].push_back(vslots);
    return vslots++;
  }
  int bind_set(const std::string& name) {
    names[name].push_back(sslots);
    return sslots++;
  }
  void unbind(const std::string& name) {
    auto it = names.find(name);
    it->second.pop_back();
    if (it->second.empty()) names.erase(it);
  }
  int lookup(const std::string& name) const {
    auto it = names.find(name);
    if (it == names.end()) throw EvalError("unbound variable '" + name + "'");
    return it->second.back();
  }
};

void merge_into(std::vector<int>& into, const std::vector<int>& from) {
  std::vector<int> out;
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
  into = std::move(out);
}

void erase_slot(std::vector<int>& v, int slot) {
  v.erase(std::remove(v.begin(), v.end(), slot), v.end());
}

void flatten_and(const Formula& f, std::vector<Formula>& out) {
  if (f.op() == Op::And) {
    flatten_and(f.child(0), out);
    flatten_and(f.child(1), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

struct Evaluator::Impl {
  Impl(const Structure& s, const HookRegistry* hooks, EvalOptions options)
      : s(s), hooks(hooks), options(options), n(s.order()), words((n + 63) / 64) {}

  const Structure& s;
  const HookRegistry* hooks;
  EvalOptions options;
  std::size_t n;
  std::size_t words;
  std::deque<Node> nodes;
  std::map<const MacroDef*, std::unique_ptr<Unit>> units;
  std::vector<Query> queries;

  Node* fresh(Op op) {
    nodes.emplace_back();
    nodes.back().op = op;
    return &nodes.back();
  }

  Unit* unit_for(const std::shared_ptr<const MacroDef>& def) {
    auto it = units.find(def.get());
    if (it != units.end()) return it->second.get();
    auto u = std::make_unique<Unit>();
    u->def = def.get();
    if (hooks) u->factory = hooks->find(def->name);
    if (!u->factory) {
      Scope scope;
      for (const auto& formal : def->formals) scope.bind_vertex(formal);
      u->root = compile(def->body, scope);
      u->frame.v.assign(scope.vslots, 0);
      u->frame.size_sets(scope.sslots, words);
    }
    Unit* raw = u.get();
    units.emplace(def.get(), std::move(u));
    return raw;
  }

  Node* compile(const Formula& f, Scope& scope) {
    Node* node = fresh(f.op());
    switch (f.op()) {
      case Op::True:
      case Op::False:
        break;
      case Op::Adj:
      case Op::Arc:
      case Op::Equal:
        if (f.op() == Op::Adj && s.directed())
          throw EvalError("adj is not in the digraph signature; use arc");
        if (f.op() == Op::Arc && !s.directed())
          throw EvalError("arc is only defined on digraphs");
        node->a = scope.lookup(f.first());
        node->b = scope.lookup(f.second());
        node->free_v = {std::min(node->a, node->b), std::max(node->a, node->b)};
        if (node->a == node->b) node->free_v.pop_back();
        break;
      case Op::Label:
        node->label = s.label_index(f.label());
        if (node->label < 0) throw EvalError("unknown label '" + f.label() + "'");
        node->a = scope.lookup(f.first());
        node->free_v = {node->a};
        break;
      case Op::Member:
        node->a = scope.lookup(f.first());
        node->b = scope.lookup(f.second());
        node->free_v = {node->a};
        node->free_s = {node->b};
        break;
      case Op::Not:
      case Op::And:
      case Op::Or:
      case Op::Implies:
        for (std::size_t i = 0; i < f.arity(); ++i) {
          Node* kid = compile(f.child(i), scope);
          node->kids.push_back(kid);
          merge_into(node->free_v, kid->free_v);
          merge_into(node->free_s, kid->free_s);
        }
        break;
      case Op::Macro: {
        node->unit = unit_for(f.macro());
        for (const auto& a : f.arguments()) node->args.push_back(scope.lookup(a));
        node->free_v = node->args;
        std::sort(node->free_v.begin(), node->free_v.end());
        node->free_v.erase(std::unique(node->free_v.begin(), node->free_v.end()), node->free_v.end());
        break;
      }
      case Op::Exists:
      case Op::Forall:
        if (f.binds_set()) compile_set_quantifier(f, node, scope);
        else compile_vertex_quantifier(f, node, scope);
        node->memo = options.memoise && node->free_s.empty() && node->free_v.size() <= 2;
        break;
    }
    return node;
  }

  void compile_vertex_quantifier(const Formula& f, Node* node, Scope& scope) {
    node->var = scope.bind_vertex(f.first());
    std::vector<Formula> parts;
    Formula consequent;
    bool has_consequent = false;
    if (f.op() == Op::Exists) {
      flatten_and(f.child(), parts);
    } else if (f.child().op() == Op::Implies) {
      flatten_and(f.child().child(0), parts);
      consequent = f.child().child(1);
      has_consequent = true;
    } else {
      consequent = f.child();
      has_consequent = true;
    }
    std::vector<Node*> compiled;
    for (const auto& p : parts) compiled.push_back(compile(p, scope));
    if (has_consequent) node->consequent = compile(consequent, scope);
    scope.unbind(f.first());

    for (Node* part : compiled) {
      merge_into(node->free_v, part->free_v);
      merge_into(node->free_s, part->free_s);
      bool local = part->free_s.empty() &&
                   std::all_of(part->free_v.begin(), part->free_v.end(),
                               [&](int slot) { return slot == node->var; });
      if (options.restrict_domains && local) {
        node->guards.push_back(part);
      } else if (options.restrict_domains && node->anchor < 0 && part->op == Op::Adj &&
                 part->a != part->b && (part->a == node->var || part->b == node->var)) {
        node->anchor = part->a == node->var ? part->b : part->a;
      } else {
        node->rest.push_back(part);
      }
    }
    if (node->consequent) {
      merge_into(node->free_v, node->consequent->free_v);
      merge_into(node->free_s, node->consequent->free_s);
    }
    erase_slot(node->free_v, node->var);
  }

  void compile_set_quantifier(const Formula& f, Node* node, Scope& scope) {
    node->set_quantifier = true;
    node->var = scope.bind_set(f.first());
    Node* body = compile(f.child(), scope);
    scope.unbind(f.first());
    node->kids.push_back(body);
    node->block = {node};
    if (body->set_quantifier && body->op == node->op)
      node->block.insert(node->block.end(), body->block.begin(), body->block.end());
    node->free_v = body->free_v;
    node->free_s = body->free_s;
    erase_slot(node->free_s, node->var);
    if (f.has_domain() && options.restrict_domains) {
      node->domain_var = scope.bind_vertex(f.domain_variable());
      node->domain = compile(f.domain(), scope);
      scope.unbind(f.domain_variable());
    }
  }

  bool eval(Node* node, Frame& fr) {
    switch (node->op) {
      case Op::True: return true;
      case Op::False: return false;
      case Op::Adj: return s.adjacent(fr.v[node->a], fr.v[node->b]);
      case Op::Arc: return s.arc(fr.v[node->a], fr.v[node->b]);
      case Op::Label: return s.has_label(fr.v[node->a], node->label);
      case Op::Equal: return fr.v[node->a] == fr.v[node->b];
      case Op::Member: {
        Vertex v = fr.v[node->a];
        return (fr.s[node->b][v / 64] >> (v % 64)) & 1u;
      }
      case Op::Not: return !eval(node->kids[0], fr);
      case Op::And: return eval(node->kids[0], fr) && eval(node->kids[1], fr);
      case Op::Or: return eval(node->kids[0], fr) || eval(node->kids[1], fr);
      case Op::Implies: return !eval(node->kids[0], fr) || eval(node->kids[1], fr);
      case Op::Macro: return call(node, fr);
      case Op::Exists:
      case Op::Forall:
        if (!node->memo) return quantify(node, fr);
        return memoised(node, fr);
    }
    return false;
  }

  bool memoised(Node* node, Frame& fr) {
    switch (node->free_v.size()) {
      case 0:
        if (node->memo0 < 0) node->memo0 = quantify(node, fr);
        return node->memo0;
      case 1: {
        if (node->memo1.empty()) node->memo1.assign(n, -1);
        signed char& slot = node->memo1[fr.v[node->free_v[0]]];
        if (slot < 0) slot = quantify(node, fr);
        return slot;
      }
      default: {
        std::uint64_t key = fr.v[node->free_v[0]] * n + fr.v[node->free_v[1]];
        auto it = node->memo2.find(key);
        if (it != node->memo2.end()) return it->second;
        bool value = quantify(node, fr);
        node->memo2.emplace(key, value);
        return value;
      }
    }
  }

  bool quantify(Node* node, Frame& fr) {
    return node->set_quantifier ? quantify_set(node, fr) : quantify_vertex(node, fr);
  }

  void prepare_guards(Node* node, Frame& fr) {
    node->guards_ready = true;
    node->guard_bits.assign(words, 0);
    for (Vertex w = 0; w < n; ++w) {
      fr.v[node->var] = w;
      bool ok = true;
      for (Node* g : node->guards)
        if (!eval(g, fr)) {
          ok = false;
          break;
        }
      if (ok) {
        node->guard_list.push_back(w);
        node->guard_bits[w / 64] |= std::uint64_t{1} << (w % 64);
      }
    }
  }

  bool quantify_vertex(Node* node, Frame& fr) {
    const bool existential = node->op == Op::Exists;
    if (!node->guards.empty() && !node->guards_ready) prepare_guards(node, fr);
    auto decide = [&](Vertex w) -> bool {  // true when w settles the quantifier
      fr.v[node->var] = w;
      for (Node* r : node->rest)
        if (!eval(r, fr)) return false;
      return existential || !eval(node->consequent, fr);
    };
    if (node->anchor >= 0) {
      const auto& nb = s.neighbours(fr.v[node->anchor]);
      bool filter = !node->guards.empty();
      for (Vertex w : nb) {
        if (filter && !((node->guard_bits[w / 64] >> (w % 64)) & 1u)) continue;
        if (decide(w)) return existential;
      }
    } else if (!node->guards.empty()) {
      for (Vertex w : node->guard_list)
        if (decide(w)) return existential;
    } else {
      for (Vertex w = 0; w < n; ++w)
        if (decide(w)) return existential;
    }
    return !existential;
  }

  void prepare_domain(Node* node, Frame& fr) {
    node->domain_ready = true;
    for (Vertex w = 0; w < n; ++w) {
      if (node->domain) {
        fr.v[node->domain_var] = w;
        if (!eval(node->domain, fr)) continue;
      }
      node->domain_list.push_back(w);
    }
    if (node->domain_list.size() > kSetDomainCeiling)
      throw CapacityError("set quantifier over " + std::to_string(node->domain_list.size()) +
                          " vertices exceeds the ceiling of " +
                          std::to_string(kSetDomainCeiling));
  }

  // The whole block is decided at once: membership is fixed one vertex at a
  // time and a branch stops as soon as the body's Kleene value is settled.
  bool quantify_set(Node* node, Frame& fr) {
    const bool existential = node->op == Op::Exists;
    if (!node->domain_ready) {
      std::map<Vertex, std::vector<int>> joins;
      for (std::size_t i = 0; i < node->block.size(); ++i) {
        Node* q = node->block[i];
        if (!q->domain_ready) prepare_domain(q, fr);
        for (Vertex w : q->domain_list) joins[w].push_back(static_cast<int>(i));
      }
      node->steps.assign(joins.begin(), joins.end());
    }
    for (Node* q : node->block) {
      Bits& known = fr.known[q->var];
      known.assign(words, ~std::uint64_t{0});
      for (Vertex w : q->domain_list) known[w / 64] &= ~(std::uint64_t{1} << (w % 64));
      fr.s[q->var].assign(words, 0);
      fr.partial[q->var] = 1;
    }
    bool settled = search(node, fr, 0);
    for (Node* q : node->block) fr.partial[q->var] = 0;
    return settled ? existential : !existential;
  }

  // True when some completion of the current partial sets settles the block
  // (a witness for E, a counterexample for A).
  bool search(Node* node, Frame& fr, std::size_t step) {
    const bool existential = node->op == Op::Exists;
    Node* body = node->block.back()->kids[0];
    if (step == node->steps.size()) return eval(body, fr) == existential;
    Tri t = eval3(body, fr);
    if (t != kUnknown) return (t == kTrue) == existential;
    const auto& [w, positions] = node->steps[step];
    const std::uint64_t bit = std::uint64_t{1} << (w % 64);
    for (int i : positions) fr.known[node->block[i]->var][w / 64] |= bit;
    bool settled = false;
    const std::uint64_t combos = std::uint64_t{1} << positions.size();
    for (std::uint64_t c = 0; c < combos && !settled; ++c) {
      for (std::size_t j = 0; j < positions.size(); ++j) {
        Bits& set = fr.s[node->block[positions[j]]->var];
        if ((c >> j) & 1u) set[w / 64] |= bit;
        else set[w / 64] &= ~bit;
      }
      settled = search(node, fr, step + 1);
    }
    for (int i : positions) {
      fr.known[node->block[i]->var][w / 64] &= ~bit;
      fr.s[node->block[i]->var][w / 64] &= ~bit;
    }
    return settled;
  }

  bool touches_partial(const Node* node, const Frame& fr) const {
    for (int slot : node->free_s)
      if (fr.partial[slot]) return true;
    return false;
  }

  Tri eval3(Node* node, Frame& fr) {
    if (!touches_partial(node, fr)) return eval(node, fr) ? kTrue : kFalse;
    switch (node->op) {
      case Op::Member: {
        Vertex v = fr.v[node->a];
        if (!((fr.known[node->b][v / 64] >> (v % 64)) & 1u)) return kUnknown;
        return (fr.s[node->b][v / 64] >> (v % 64)) & 1u ? kTrue : kFalse;
      }
      case Op::Not: {
        Tri t = eval3(node->kids[0], fr);
        return t == kUnknown ? kUnknown : t == kTrue ? kFalse : kTrue;
      }
      case Op::And: {
        Tri a = eval3(node->kids[0], fr);
        if (a == kFalse) return kFalse;
        Tri b = eval3(node->kids[1], fr);
        if (b == kFalse) return kFalse;
        return a == kTrue && b == kTrue ? kTrue : kUnknown;
      }
      case Op::Or: {
        Tri a = eval3(node->kids[0], fr);
        if (a == kTrue) return kTrue;
        Tri b = eval3(node->kids[1], fr);
        if (b == kTrue) return kTrue;
        return a == kFalse && b == kFalse ? kFalse : kUnknown;
      }
      case Op::Implies: {
        Tri a = eval3(node->kids[0], fr);
        if (a == kFalse) return kTrue;
        Tri b = eval3(node->kids[1], fr);
        if (b == kTrue) return kTrue;
        return a == kTrue && b == kFalse ? kFalse : kUnknown;
      }
      case Op::Exists:
      case Op::Forall:
        // a nested set block over partial sets is not searched
        return node->set_quantifier ? kUnknown : quantify_vertex3(node, fr);
      default:
        return kUnknown;  // atoms without set variables never get here
    }
  }

  Tri quantify_vertex3(Node* node, Frame& fr) {
    const bool existential = node->op == Op::Exists;
    if (!node->guards.empty() && !node->guards_ready) prepare_guards(node, fr);
    bool unknown = false;
    // kTrue when w settles the quantifier, kUnknown when it might
    auto decide = [&](Vertex w) -> Tri {
      fr.v[node->var] = w;
      Tri conj = kTrue;
      for (Node* r : node->rest) {
        Tri t = eval3(r, fr);
        if (t == kFalse) return kFalse;
        if (t == kUnknown) conj = kUnknown;
      }
      if (existential) return conj;
      Tri c = eval3(node->consequent, fr);
      if (c == kTrue) return kFalse;
      return c == kFalse && conj == kTrue ? kTrue : kUnknown;
    };
    auto visit = [&](Vertex w) {
      Tri t = decide(w);
      if (t == kUnknown) unknown = true;
      return t == kTrue;
    };
    bool settled = false;
    if (node->anchor >= 0) {
      bool filter = !node->guards.empty();
      for (Vertex w : s.neighbours(fr.v[node->anchor])) {
        if (filter && !((node->guard_bits[w / 64] >> (w % 64)) & 1u)) continue;
        if ((settled = visit(w))) break;
      }
    } else if (!node->guards.empty()) {
      for (Vertex w : node->guard_list)
        if ((settled = visit(w))) break;
    } else {
      for (Vertex w = 0; w < n && !settled; ++w) settled = visit(w);
    }
    if (settled) return existential ? kTrue : kFalse;
    if (unknown) return kUnknown;
    return existential ? kFalse : kTrue;
  }

  bool call(Node* node, Frame& fr) {
    Unit* u = node->unit;
    Vertex vals[8];
    const std::size_t k = node->args.size();
    if (k > 8) throw EvalError("predicates take at most 8 arguments");
    for (std::size_t i = 0; i < k; ++i) vals[i] = fr.v[node->args[i]];
    if (u->factory) {
      if (!u->hook_ready) {
        u->hook = (*u->factory)(s, u->def->parameter);
        u->hook_ready = true;
      }
      return u->hook(std::span<const Vertex>(vals, k));
    }
    const bool use_memo = options.memoise && k <= 4 && n < 65536;
    std::uint64_t key = 0;
    if (use_memo) {
      for (std::size_t i = 0; i < k; ++i) key |= static_cast<std::uint64_t>(vals[i]) << (16 * i);
      auto it = u->memo.find(key);
      if (it != u->memo.end()) return it->second;
    }
    for (std::size_t i = 0; i < k; ++i) u->frame.v[i] = vals[i];
    bool value = eval(u->root, u->frame);
    if (use_memo) u->memo.emplace(key, value);
    return value;
  }
};

Evaluator::Evaluator(const Structure& s, const HookRegistry* hooks, EvalOptions options)
    : impl_(std::make_unique<Impl>(s, hooks, options)) {}

Evaluator::~Evaluator() = default;

const Structure& Evaluator::structure() const { return impl_->s; }

int Evaluator::compile(const Formula& f, const std::vector<std::string>& vertex_params,
                       const std::vector<std::string>& set_params) {
  Scope scope;
  for (const auto& p : vertex_params) {
    if (!is_vertex_variable(p)) throw KindError("'" + p + "' is not a vertex variable");
    scope.bind_vertex(p);
  }
  for (const auto& p : set_params) {
    if (!is_set_variable(p)) throw KindError("'" + p + "' is not a set variable");
    scope.bind_set(p);
  }
  Query q;
  q.root = impl_->compile(f, scope);
  q.vparams = vertex_params.size();
  q.sparams = set_params.size();
  q.frame.v.assign(scope.vslots, 0);
  q.frame.size_sets(scope.sslots, impl_->words);
  impl_->queries.push_back(std::move(q));
  return static_cast<int>(impl_->queries.size() - 1);
}

bool Evaluator::holds(int query, std::span<const Vertex> vertices,
                      std::span<const std::vector<Vertex>> sets) {
  Query& q = impl_->queries.at(query);
  if (vertices.size() != q.vparams || sets.size() != q.sparams)
    throw EvalError("wrong number of arguments for compiled formula");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= impl_->n) throw EvalError("vertex argument out of range");
    q.frame.v[i] = vertices[i];
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Bits& b = q.frame.s[i];
    std::fill(b.begin(), b.end(), 0);
    for (Vertex v : sets[i]) {
      if (v >= impl_->n) throw EvalError("set argument out of range");
      b[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return impl_->eval(q.root, q.frame);
}

namespace {

bool evaluate_on(const Structure& s, const Formula& f, const Assignment& env,
                 const HookRegistry* hooks, EvalOptions options) {
  FreeVariables fv = free_variables(f);
  std::vector<std::string> vnames(fv.vertices.begin(), fv.vertices.end());
  std::vector<std::string> snames(fv.sets.begin(), fv.sets.end());
  std::vector<Vertex> vs;
  std::vector<std::vector<Vertex>> ss;
  for (const auto& name : vnames) {
    auto it = env.vertices.find(name);
    if (it == env.vertices.end()) throw EvalError("unbound variable '" + name + "'");
    vs.push_back(it->second);
  }
  for (const auto& name : snames) {
    auto it = env.sets.find(name);
    if (it == env.sets.end()) throw EvalError("unbound variable '" + name + "'");
    ss.push_back(it->second);
  }
  Evaluator ev(s, hooks, options);
  int q = ev.compile(f, vnames, snames);
  return ev.holds(q, vs, ss);
}

}  // namespace

bool evaluate(const LabeledGraph& g, const Formula& f, const Assignment& env,
              const HookRegistry* hooks, EvalOptions options) {
  return evaluate_on(Structure(g), f, env, hooks, options);
}

bool evaluate(const Digraph& d, const Formula& f, const Assignment& env,
              const HookRegistry* hooks, EvalOptions options) {
  return evaluate_on(Structure(d), f, env, hooks, options);
}

bool evaluate(const Graph& g, const Formula& f, const Assignment& env,
              const HookRegistry* hooks, EvalOptions options) {
  LabeledGraph lg(g);
  return evaluate_on(Structure(lg), f, env, hooks, options);
}

}  // namespace msowb
