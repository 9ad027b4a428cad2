#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "msowb/eval.hpp"
#include "msowb/formula.hpp"
#include "msowb/graph.hpp"

namespace msowb {

/// One-dimensional interpretation of labeled graphs in labeled graphs.
///
/// `alpha` and each `beta_labels` entry have free vertex variables among {x};
/// `beta_adj` among {x, y}. `name` tags the definitions produced by translate.
struct Interpretation {
  std::string name = "I";
  std::string x = "x";
  std::string y = "y";
  Formula alpha;
  Formula beta_adj;
  std::map<std::string, Formula> beta_labels;
};

/// Throws KindError if a formula of i has free variables outside its signature.
void validate(const Interpretation& i);

/// phi^I: adj(u,v) becomes ~u = v & (beta_adj(u,v) | beta_adj(v,u)), matching
/// the edges of G^I, target label atoms become their beta, vertex
/// quantifiers are relativised to alpha and set quantifiers get the domain
/// { d : alpha(d) }. Named predicates of phi are translated once each.
/// alpha and the betas enter as named predicates `<tag>_alpha`, `<tag>_beta`,
/// `<tag>_adj` and `<tag>_lab_L`, and a named predicate P of phi becomes `P_<tag>`, where
/// tag is `name` in lower case. Bound names of phi never need renaming.
/// Throws InvalidArgument for a label without beta and EvalError for arc.
Formula translate(const Formula& phi, const Interpretation& i);

/// |phi| * (2 * max(|alpha|, |beta_adj|, |beta_L|) + 4), an upper bound on
/// formula_size(translate(phi, i)).
std::size_t translation_size_bound(const Formula& phi, const Interpretation& i);

struct InducedStructure {
  LabeledGraph graph;
  /// domain[k] is the host vertex that became vertex k.
  std::vector<Vertex> domain;
};

/// G^I: vertices are the alpha-elements in increasing host order; {a,b} is an
/// edge when a != b and beta_adj(a,b) or beta_adj(b,a) holds; loops are
/// dropped. The alphabet is the keys of beta_labels.
InducedStructure induce(const LabeledGraph& host, const Interpretation& i,
                        const HookRegistry* hooks = nullptr, EvalOptions options = {});
LabeledGraph induced_structure(const LabeledGraph& host, const Interpretation& i,
                               const HookRegistry* hooks = nullptr);

/// Replaces every adj(x,y) by arc(x,y) | arc(y,x).
Formula to_directed_formula(const Formula& phi);

struct HookMismatch {
  std::string predicate;
  std::size_t structure = 0;  // index into the battery
  std::vector<Vertex> arguments;
  bool hook_value = false;
};

/// Compares every hooked predicate among `defs` against full expansion of its
/// body on every argument tuple of every battery structure. Returns the
/// disagreements (empty means the hooks conform on the battery).
std::vector<HookMismatch> hook_conformance(const HookRegistry& hooks,
                                           const std::vector<std::shared_ptr<const MacroDef>>& defs,
                                           const std::vector<LabeledGraph>& battery);

}  // namespace msowb
