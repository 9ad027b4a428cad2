#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace msowb {

/// Node kinds of the MSO1-L abstract syntax. Quantifiers are vertex or set
/// quantifiers according to the case of the bound name: lowercase names are
/// vertex variables, uppercase names are set variables.
enum class Op {
  True,
  False,
  Adj,      // adj(x,y)
  Arc,      // arc(x,y), digraph signature only
  Label,    // lab_NAME(x)
  Equal,    // x = y
  Member,   // x in X
  Not,
  And,
  Or,
  Implies,
  Exists,
  Forall,
  Macro,    // named predicate applied to vertex arguments
};

bool is_set_variable(const std::string& name);
bool is_vertex_variable(const std::string& name);

struct FormulaNode;
struct MacroDef;

/// Immutable, shared MSO1-L formula.
class Formula {
 public:
  /// The constant true.
  Formula();
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  Op op() const;
  /// Atom operands and quantifier bound variable.
  const std::string& first() const;
  const std::string& second() const;
  const std::string& label() const;
  const Formula& child(std::size_t i = 0) const;
  std::size_t arity() const;
  bool is_quantifier() const { return op() == Op::Exists || op() == Op::Forall; }
  bool binds_set() const;

  /// Set quantifiers produced by interpretation may be relativised: they range
  /// only over subsets of { v : domain(v) }.
  bool has_domain() const;
  const std::string& domain_variable() const;
  const Formula& domain() const;

  const std::shared_ptr<const MacroDef>& macro() const;
  const std::vector<std::string>& arguments() const;

  const FormulaNode* get() const { return node_.get(); }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Op op = Op::True;
  std::string first;
  std::string second;
  std::string label;
  std::vector<Formula> children;
  std::string domain_variable;
  std::shared_ptr<const Formula> domain;
  std::shared_ptr<const MacroDef> macro;
  std::vector<std::string> arguments;
};

/// A named predicate: `body` with free vertex variables exactly among `formals`.
/// Applications print as the substituted body, so macros never leave the
/// grammar; evaluators may replace a macro by a native hook (see eval.hpp).
struct MacroDef {
  std::string name;
  int parameter = 0;
  std::vector<std::string> formals;
  Formula body;
};

std::shared_ptr<const MacroDef> make_macro(std::string name, std::vector<std::string> formals,
                                           Formula body, int parameter = 0);

// Constructors. Vertex/set kinds are checked and violations raise KindError.
Formula top();
Formula bottom();
Formula adj(const std::string& x, const std::string& y);
Formula arc(const std::string& x, const std::string& y);
Formula label(const std::string& name, const std::string& x);
Formula equal(const std::string& x, const std::string& y);
Formula member(const std::string& x, const std::string& set);
Formula operator!(const Formula& f);
Formula operator&&(const Formula& a, const Formula& b);
Formula operator||(const Formula& a, const Formula& b);
Formula implies(const Formula& a, const Formula& b);
Formula exists(const std::string& var, const Formula& body);
Formula forall(const std::string& var, const Formula& body);
/// Set quantifier ranging over subsets of { domain_var : domain }.
Formula exists_within(const std::string& set_var, const std::string& domain_var,
                      const Formula& domain, const Formula& body);
Formula forall_within(const std::string& set_var, const std::string& domain_var,
                      const Formula& domain, const Formula& body);
Formula apply(const std::shared_ptr<const MacroDef>& macro, std::vector<std::string> args);

/// Left-folded conjunction/disjunction; empty lists give true/false.
Formula conjunction(const std::vector<Formula>& parts);
Formula disjunction(const std::vector<Formula>& parts);

/// Rebuilds a node of the same kind with new children (quantifier bound
/// variable and domain kept).
Formula with_children(const Formula& f, std::vector<Formula> children);

struct FreeVariables {
  std::set<std::string> vertices;
  std::set<std::string> sets;

  bool empty() const { return vertices.empty() && sets.empty(); }
  bool operator==(const FreeVariables&) const = default;
};

FreeVariables free_variables(const Formula& f);
bool is_sentence(const Formula& f);

/// |phi| := number of AST nodes. Macro applications count as their expanded
/// body; set-quantifier domains are annotations and are not counted.
std::size_t formula_size(const Formula& f);

/// Number of set quantifiers / vertex quantifiers (expanded).
std::size_t set_quantifier_count(const Formula& f);
std::size_t vertex_quantifier_count(const Formula& f);

/// Label names occurring in f (expanded).
std::set<std::string> labels_used(const Formula& f);

/// Every variable name occurring in f, bound or free, including macro bodies.
std::set<std::string> names_used(const Formula& f);

/// Capture-avoiding renaming of free variables.
Formula rename_free(const Formula& f, const std::map<std::string, std::string>& renaming);

/// Structural equality. Named predicates compare by formals, parameter and
/// body; their names are ignored.
bool operator==(const Formula& a, const Formula& b);

/// Concrete syntax; macros are expanded in place.
std::string to_string(const Formula& f);

/// Concrete syntax printing macro applications as calls `name(args)` with the
/// names given per definition, instead of expanding them.
std::string to_string_with_calls(const Formula& f,
                                 const std::map<const MacroDef*, std::string>& names);

/// Generator of variable names that do not clash with a given set.
class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> taken) : taken_(std::move(taken)) {}
  std::string vertex();
  std::string set();
  void reserve(const std::set<std::string>& names) { taken_.insert(names.begin(), names.end()); }

 private:
  std::string next(const std::string& prefix);
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

}  // namespace msowb
