#include "msowb/interp.hpp"

#include <algorithm>
#include <cctype>

#include "msowb/error.hpp"

namespace msowb {

namespace {

void check_signature(const Formula& f, const std::set<std::string>& allowed, const char* what) {
  FreeVariables fv = free_variables(f);
  if (!fv.sets.empty()) throw KindError(std::string(what) + " has free set variables");
  for (const auto& v : fv.vertices)
    if (!allowed.count(v))
      throw KindError(std::string(what) + " has unexpected free variable '" + v + "'");
}

class Translator {
 public:
  explicit Translator(const Interpretation& i) : i_(i), tag_(i.name) {
    // definition names start in lower case
    for (char& ch : tag_) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    alpha_ = make_macro(tag_ + "_alpha", {i.x}, i.alpha);
    // induce symmetrises beta_adj and drops loops; the translation must agree
    auto beta = make_macro(tag_ + "_beta", {i.x, i.y}, i.beta_adj);
    adj_ = make_macro(tag_ + "_adj", {i.x, i.y},
                      !equal(i.x, i.y) && (msowb::apply(beta, {i.x, i.y}) || msowb::apply(beta, {i.y, i.x})));
    for (const auto& [label, beta] : i.beta_labels)
      labels_[label] = make_macro(tag_ + "_lab_" + label, {i.x}, beta);
  }

  Formula run(const Formula& f) {
    switch (f.op()) {
      case Op::True:
      case Op::False:
      case Op::Equal:
      case Op::Member:
        return f;
      case Op::Adj:
        return msowb::apply(adj_, {f.first(), f.second()});
      case Op::Arc:
        throw EvalError("arc atoms cannot be translated by an undirected interpretation");
      case Op::Label: {
        auto it = labels_.find(f.label());
        if (it == labels_.end())
          throw InvalidArgument("interpretation " + i_.name + " has no beta for label '" +
                                f.label() + "'");
        return msowb::apply(it->second, {f.first()});
      }
      case Op::Not:
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        std::vector<Formula> kids;
        for (std::size_t k = 0; k < f.arity(); ++k) kids.push_back(run(f.child(k)));
        return with_children(f, std::move(kids));
      }
      case Op::Exists:
      case Op::Forall: {
        Formula body = run(f.child());
        if (f.binds_set()) {
          // Elements outside the domain are never tested for membership, so
          // the quantifier only needs subsets of the alpha-set.
          std::string d = f.has_domain() ? f.domain_variable() : "d";
          Formula domain = msowb::apply(alpha_, {d});
          if (f.has_domain()) domain = domain && run(f.domain());
          return f.op() == Op::Exists ? exists_within(f.first(), d, domain, body)
                                      : forall_within(f.first(), d, domain, body);
        }
        Formula guard = msowb::apply(alpha_, {f.first()});
        return f.op() == Op::Exists ? exists(f.first(), guard && body)
                                    : forall(f.first(), implies(guard, body));
      }
      case Op::Macro: {
        auto it = derived_.find(f.macro().get());
        if (it == derived_.end()) {
          const MacroDef& def = *f.macro();
          auto d = make_macro(def.name + "_" + tag_, def.formals, run(def.body), def.parameter);
          it = derived_.emplace(f.macro().get(), d).first;
        }
        return msowb::apply(it->second, f.arguments());
      }
    }
    return f;
  }

 private:
  const Interpretation& i_;
  std::string tag_;
  std::shared_ptr<const MacroDef> alpha_;
  std::shared_ptr<const MacroDef> adj_;
  std::map<std::string, std::shared_ptr<const MacroDef>> labels_;
  std::map<const MacroDef*, std::shared_ptr<const MacroDef>> derived_;
};

class Directed {
 public:
  Formula run(const Formula& f) {
    switch (f.op()) {
      case Op::Adj:
        return arc(f.first(), f.second()) || arc(f.second(), f.first());
      case Op::Macro: {
        auto it = derived_.find(f.macro().get());
        if (it == derived_.end()) {
          const MacroDef& def = *f.macro();
          auto d = make_macro(def.name + "_dir", def.formals, run(def.body), def.parameter);
          it = derived_.emplace(f.macro().get(), d).first;
        }
        return msowb::apply(it->second, f.arguments());
      }
      case Op::Exists:
      case Op::Forall:
        if (f.has_domain()) {
          Formula body = run(f.child());
          Formula dom = run(f.domain());
          return f.op() == Op::Exists ? exists_within(f.first(), f.domain_variable(), dom, body)
                                      : forall_within(f.first(), f.domain_variable(), dom, body);
        }
        [[fallthrough]];
      case Op::Not:
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        std::vector<Formula> kids;
        for (std::size_t k = 0; k < f.arity(); ++k) kids.push_back(run(f.child(k)));
        return with_children(f, std::move(kids));
      }
      default:
        return f;
    }
  }

 private:
  std::map<const MacroDef*, std::shared_ptr<const MacroDef>> derived_;
};

}  // namespace

void validate(const Interpretation& i) {
  if (!is_vertex_variable(i.x) || !is_vertex_variable(i.y) || i.x == i.y)
    throw KindError("interpretation parameters must be two distinct vertex variables");
  check_signature(i.alpha, {i.x}, "alpha");
  check_signature(i.beta_adj, {i.x, i.y}, "beta_adj");
  for (const auto& [label, beta] : i.beta_labels) check_signature(beta, {i.x}, "label beta");
}

Formula translate(const Formula& phi, const Interpretation& i) {
  validate(i);
  Translator t(i);
  return t.run(phi);
}

std::size_t translation_size_bound(const Formula& phi, const Interpretation& i) {
  std::size_t m = std::max(formula_size(i.alpha), formula_size(i.beta_adj));
  for (const auto& [label, beta] : i.beta_labels) m = std::max(m, formula_size(beta));
  return formula_size(phi) * (2 * m + 4);
}

InducedStructure induce(const LabeledGraph& host, const Interpretation& i,
                        const HookRegistry* hooks, EvalOptions options) {
  validate(i);
  Structure s(host);
  Evaluator ev(s, hooks, options);
  int qa = ev.compile(i.alpha, {i.x});
  int qb = ev.compile(i.beta_adj, {i.x, i.y});
  std::map<std::string, int> ql;
  for (const auto& [label, beta] : i.beta_labels) ql[label] = ev.compile(beta, {i.x});

  InducedStructure out;
  for (Vertex v = 0; v < host.graph().order(); ++v) {
    Vertex arg[1] = {v};
    if (ev.holds(qa, arg)) out.domain.push_back(v);
  }
  Graph g(out.domain.size());
  for (std::size_t a = 0; a < out.domain.size(); ++a)
    for (std::size_t b = a + 1; b < out.domain.size(); ++b) {
      Vertex ab[2] = {out.domain[a], out.domain[b]};
      Vertex ba[2] = {out.domain[b], out.domain[a]};
      if (ev.holds(qb, ab) || ev.holds(qb, ba)) g.add_edge(a, b);
    }
  std::vector<std::string> alphabet;
  for (const auto& [label, beta] : i.beta_labels) alphabet.push_back(label);
  out.graph = LabeledGraph(std::move(g), alphabet);
  for (const auto& [label, q] : ql)
    for (std::size_t a = 0; a < out.domain.size(); ++a) {
      Vertex arg[1] = {out.domain[a]};
      if (ev.holds(q, arg)) out.graph.add_label(a, label);
    }
  return out;
}

LabeledGraph induced_structure(const LabeledGraph& host, const Interpretation& i,
                               const HookRegistry* hooks) {
  return induce(host, i, hooks).graph;
}

Formula to_directed_formula(const Formula& phi) {
  Directed d;
  return d.run(phi);
}

std::vector<HookMismatch> hook_conformance(const HookRegistry& hooks,
                                           const std::vector<std::shared_ptr<const MacroDef>>& defs,
                                           const std::vector<LabeledGraph>& battery) {
  std::vector<HookMismatch> out;
  for (std::size_t gi = 0; gi < battery.size(); ++gi) {
    Structure s(battery[gi]);
    Evaluator native(s, &hooks);
    Evaluator expanded(s, nullptr);
    const std::size_t n = s.order();
    for (const auto& def : defs) {
      if (!hooks.find(def->name)) continue;
      Formula call = msowb::apply(def, def->formals);
      int qn = native.compile(call, def->formals);
      int qe = expanded.compile(call, def->formals);
      const std::size_t k = def->formals.size();
      std::vector<Vertex> args(k, 0);
      std::size_t total = 1;
      for (std::size_t j = 0; j < k; ++j) total *= n;
      for (std::size_t t = 0; t < total; ++t) {
        std::size_t rest = t;
        for (std::size_t j = 0; j < k; ++j) {
          args[j] = rest % n;
          rest /= n;
        }
        bool a = native.holds(qn, args);
        if (a != expanded.holds(qe, args))
          out.push_back({def->name, gi, args, a});
      }
    }
  }
  return out;
}

}  // namespace msowb
