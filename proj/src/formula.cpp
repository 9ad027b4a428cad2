#include "msowb/formula.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

#include "msowb/error.hpp"

namespace msowb {

namespace {

bool is_reserved(const std::string& name) {
  return name == "adj" || name == "arc" || name == "in" || name == "true" || name == "false" ||
         name == "E" || name == "A" || name == "def" || name.rfind("lab_", 0) == 0;
}

bool is_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void require_vertex(const std::string& name, const char* where) {
  if (!is_identifier(name) || is_reserved(name))
    throw KindError(std::string("invalid variable name '") + name + "' in " + where);
  if (!is_vertex_variable(name))
    throw KindError("set variable '" + name + "' used as a vertex in " + where);
}

void require_set(const std::string& name, const char* where) {
  if (!is_identifier(name) || is_reserved(name))
    throw KindError(std::string("invalid variable name '") + name + "' in " + where);
  if (!is_set_variable(name))
    throw KindError("vertex variable '" + name + "' used as a set in " + where);
}

Formula make(FormulaNode node) {
  return Formula(std::make_shared<const FormulaNode>(std::move(node)));
}

Formula binary(Op op, const Formula& a, const Formula& b) {
  FormulaNode n;
  n.op = op;
  n.children = {a, b};
  return make(std::move(n));
}

Formula quantifier(Op op, const std::string& var, const Formula& body) {
  if (!is_identifier(var) || is_reserved(var))
    throw KindError("invalid bound variable name '" + var + "'");
  FormulaNode n;
  n.op = op;
  n.first = var;
  n.children = {body};
  return make(std::move(n));
}

Formula relativised(Op op, const std::string& set_var, const std::string& domain_var,
                    const Formula& domain, const Formula& body) {
  require_set(set_var, "set quantifier");
  require_vertex(domain_var, "quantifier domain");
  FreeVariables fv = free_variables(domain);
  fv.vertices.erase(domain_var);
  if (!fv.empty()) throw KindError("quantifier domain must have only its own variable free");
  FormulaNode n;
  n.op = op;
  n.first = set_var;
  n.children = {body};
  n.domain_variable = domain_var;
  n.domain = std::make_shared<const Formula>(domain);
  return make(std::move(n));
}

}  // namespace

bool is_set_variable(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

bool is_vertex_variable(const std::string& name) {
  return !name.empty() && std::islower(static_cast<unsigned char>(name[0]));
}

Formula::Formula() {
  static const auto kTrue = std::make_shared<const FormulaNode>();
  node_ = kTrue;
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::first() const { return node_->first; }
const std::string& Formula::second() const { return node_->second; }
const std::string& Formula::label() const { return node_->label; }
const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }
std::size_t Formula::arity() const { return node_->children.size(); }
bool Formula::binds_set() const { return is_quantifier() && is_set_variable(node_->first); }
bool Formula::has_domain() const { return node_->domain != nullptr; }
const std::string& Formula::domain_variable() const { return node_->domain_variable; }
const Formula& Formula::domain() const { return *node_->domain; }
const std::shared_ptr<const MacroDef>& Formula::macro() const { return node_->macro; }
const std::vector<std::string>& Formula::arguments() const { return node_->arguments; }

std::shared_ptr<const MacroDef> make_macro(std::string name, std::vector<std::string> formals,
                                           Formula body, int parameter) {
  for (const auto& f : formals) require_vertex(f, "macro formal");
  FreeVariables fv = free_variables(body);
  for (const auto& f : formals) fv.vertices.erase(f);
  if (!fv.empty())
    throw KindError("macro '" + name + "' body has free variables beyond its formals");
  auto def = std::make_shared<MacroDef>();
  def->name = std::move(name);
  def->parameter = parameter;
  def->formals = std::move(formals);
  def->body = std::move(body);
  return def;
}

Formula top() { return Formula(); }

Formula bottom() {
  static const Formula kFalse = [] {
    FormulaNode n;
    n.op = Op::False;
    return make(std::move(n));
  }();
  return kFalse;
}

Formula adj(const std::string& x, const std::string& y) {
  require_vertex(x, "adj");
  require_vertex(y, "adj");
  FormulaNode n;
  n.op = Op::Adj;
  n.first = x;
  n.second = y;
  return make(std::move(n));
}

Formula arc(const std::string& x, const std::string& y) {
  require_vertex(x, "arc");
  require_vertex(y, "arc");
  FormulaNode n;
  n.op = Op::Arc;
  n.first = x;
  n.second = y;
  return make(std::move(n));
}

Formula label(const std::string& name, const std::string& x) {
  require_vertex(x, "label predicate");
  if (name.empty()) throw KindError("empty label name");
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      throw KindError("invalid label name '" + name + "'");
  FormulaNode n;
  n.op = Op::Label;
  n.first = x;
  n.label = name;
  return make(std::move(n));
}

Formula equal(const std::string& x, const std::string& y) {
  require_vertex(x, "equality");
  require_vertex(y, "equality");
  FormulaNode n;
  n.op = Op::Equal;
  n.first = x;
  n.second = y;
  return make(std::move(n));
}

Formula member(const std::string& x, const std::string& set) {
  require_vertex(x, "membership");
  require_set(set, "membership");
  FormulaNode n;
  n.op = Op::Member;
  n.first = x;
  n.second = set;
  return make(std::move(n));
}

Formula operator!(const Formula& f) {
  FormulaNode n;
  n.op = Op::Not;
  n.children = {f};
  return make(std::move(n));
}

Formula operator&&(const Formula& a, const Formula& b) { return binary(Op::And, a, b); }
Formula operator||(const Formula& a, const Formula& b) { return binary(Op::Or, a, b); }
Formula implies(const Formula& a, const Formula& b) { return binary(Op::Implies, a, b); }
Formula exists(const std::string& var, const Formula& body) {
  return quantifier(Op::Exists, var, body);
}
Formula forall(const std::string& var, const Formula& body) {
  return quantifier(Op::Forall, var, body);
}

Formula exists_within(const std::string& set_var, const std::string& domain_var,
                      const Formula& domain, const Formula& body) {
  return relativised(Op::Exists, set_var, domain_var, domain, body);
}

Formula forall_within(const std::string& set_var, const std::string& domain_var,
                      const Formula& domain, const Formula& body) {
  return relativised(Op::Forall, set_var, domain_var, domain, body);
}

Formula apply(const std::shared_ptr<const MacroDef>& macro, std::vector<std::string> args) {
  if (!macro) throw InvalidArgument("null macro");
  if (args.size() != macro->formals.size())
    throw KindError("macro '" + macro->name + "' expects " +
                    std::to_string(macro->formals.size()) + " arguments");
  for (const auto& a : args) require_vertex(a, "macro argument");
  FormulaNode n;
  n.op = Op::Macro;
  n.macro = macro;
  n.arguments = std::move(args);
  return make(std::move(n));
}

Formula conjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc && parts[i];
  return acc;
}

Formula disjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return bottom();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc || parts[i];
  return acc;
}

Formula with_children(const Formula& f, std::vector<Formula> children) {
  FormulaNode n = *f.get();
  n.children = std::move(children);
  return make(std::move(n));
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, FreeVariables& out) {
  auto note = [&](const std::string& name) {
    if (name.empty() || bound.count(name)) return;
    if (is_set_variable(name)) out.sets.insert(name);
    else out.vertices.insert(name);
  };
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return;
    case Op::Adj:
    case Op::Arc:
    case Op::Equal:
    case Op::Member:
      note(f.first());
      note(f.second());
      return;
    case Op::Label:
      note(f.first());
      return;
    case Op::Macro:
      for (const auto& a : f.arguments()) note(a);
      return;
    case Op::Not:
    case Op::And:
    case Op::Or:
    case Op::Implies:
      for (std::size_t i = 0; i < f.arity(); ++i) collect_free(f.child(i), bound, out);
      return;
    case Op::Exists:
    case Op::Forall: {
      bool fresh = bound.insert(f.first()).second;
      collect_free(f.child(), bound, out);
      if (fresh) bound.erase(f.first());
      if (f.has_domain()) {
        bool dfresh = bound.insert(f.domain_variable()).second;
        collect_free(f.domain(), bound, out);
        if (dfresh) bound.erase(f.domain_variable());
      }
      return;
    }
  }
}

template <typename Visit>
void walk_expanded(const Formula& f, Visit&& visit,
                   std::unordered_map<const MacroDef*, bool>* seen_macros = nullptr) {
  visit(f);
  if (f.op() == Op::Macro) {
    if (seen_macros) {
      if (!seen_macros->emplace(f.macro().get(), true).second) return;
    }
    walk_expanded(f.macro()->body, visit, seen_macros);
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) walk_expanded(f.child(i), visit, seen_macros);
  if (f.has_domain()) walk_expanded(f.domain(), visit, seen_macros);
}

template <typename Count>
std::size_t expanded_count(const Formula& f, Count&& count,
                           std::unordered_map<const MacroDef*, std::size_t>& memo) {
  if (f.op() == Op::Macro) {
    auto it = memo.find(f.macro().get());
    if (it != memo.end()) return it->second;
    std::size_t n = expanded_count(f.macro()->body, count, memo);
    memo.emplace(f.macro().get(), n);
    return n;
  }
  std::size_t n = count(f);
  for (std::size_t i = 0; i < f.arity(); ++i) n += expanded_count(f.child(i), count, memo);
  return n;
}

}  // namespace

FreeVariables free_variables(const Formula& f) {
  FreeVariables out;
  std::set<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

std::size_t formula_size(const Formula& f) {
  std::unordered_map<const MacroDef*, std::size_t> memo;
  return expanded_count(f, [](const Formula&) { return std::size_t{1}; }, memo);
}

std::size_t set_quantifier_count(const Formula& f) {
  std::unordered_map<const MacroDef*, std::size_t> memo;
  return expanded_count(
      f, [](const Formula& g) { return std::size_t{g.binds_set() ? 1u : 0u}; }, memo);
}

std::size_t vertex_quantifier_count(const Formula& f) {
  std::unordered_map<const MacroDef*, std::size_t> memo;
  return expanded_count(
      f, [](const Formula& g) { return std::size_t{g.is_quantifier() && !g.binds_set() ? 1u : 0u}; },
      memo);
}

std::set<std::string> labels_used(const Formula& f) {
  std::set<std::string> out;
  std::unordered_map<const MacroDef*, bool> seen;
  walk_expanded(
      f, [&](const Formula& g) { if (g.op() == Op::Label) out.insert(g.label()); }, &seen);
  return out;
}

std::set<std::string> names_used(const Formula& f) {
  std::set<std::string> out;
  std::unordered_map<const MacroDef*, bool> seen;
  walk_expanded(
      f,
      [&](const Formula& g) {
        if (!g.first().empty()) out.insert(g.first());
        if (!g.second().empty()) out.insert(g.second());
        if (g.has_domain()) out.insert(g.domain_variable());
        for (const auto& a : g.arguments()) out.insert(a);
        if (g.op() == Op::Macro)
          for (const auto& a : g.macro()->formals) out.insert(a);
      },
      &seen);
  return out;
}

std::string FreshNames::next(const std::string& prefix) {
  for (;;) {
    std::string name = prefix + std::to_string(++counter_);
    if (taken_.insert(name).second) return name;
  }
}

std::string FreshNames::vertex() { return next("v"); }
std::string FreshNames::set() { return next("S"); }

namespace {

class Renamer {
 public:
  explicit Renamer(FreshNames& fresh) : fresh_(fresh) {}

  Formula run(const Formula& f, std::map<std::string, std::string> env) {
    auto map = [&](const std::string& name) {
      auto it = env.find(name);
      return it == env.end() ? name : it->second;
    };
    switch (f.op()) {
      case Op::True:
      case Op::False:
        return f;
      case Op::Adj: return adj(map(f.first()), map(f.second()));
      case Op::Arc: return arc(map(f.first()), map(f.second()));
      case Op::Equal: return equal(map(f.first()), map(f.second()));
      case Op::Member: return member(map(f.first()), map(f.second()));
      case Op::Label: return label(f.label(), map(f.first()));
      case Op::Macro: {
        std::vector<std::string> args;
        for (const auto& a : f.arguments()) args.push_back(map(a));
        return msowb::apply(f.macro(), std::move(args));
      }
      case Op::Not:
      case Op::And:
      case Op::Or:
      case Op::Implies: {
        std::vector<Formula> kids;
        for (std::size_t i = 0; i < f.arity(); ++i) kids.push_back(run(f.child(i), env));
        return with_children(f, std::move(kids));
      }
      case Op::Exists:
      case Op::Forall: {
        std::string bound = rebind(f.first(), env);
        auto inner = env;
        inner[f.first()] = bound;
        Formula body = run(f.child(), inner);
        if (f.has_domain()) {
          std::string dvar = rebind(f.domain_variable(), env);
          auto denv = env;
          denv[f.domain_variable()] = dvar;
          Formula dom = run(f.domain(), denv);
          return relativised(f.op(), bound, dvar, dom, body);
        }
        return quantifier(f.op(), bound, body);
      }
    }
    return f;
  }

 private:
  // A binder keeps its name unless that name is the image of some other
  // variable, in which case it would capture it.
  std::string rebind(const std::string& name, const std::map<std::string, std::string>& env) {
    for (const auto& [from, to] : env)
      if (to == name && from != name)
        return is_set_variable(name) ? fresh_.set() : fresh_.vertex();
    return name;
  }

  FreshNames& fresh_;
};

}  // namespace

Formula rename_free(const Formula& f, const std::map<std::string, std::string>& renaming) {
  std::set<std::string> taken = names_used(f);
  for (const auto& [a, b] : renaming) {
    taken.insert(a);
    taken.insert(b);
  }
  FreshNames fresh(std::move(taken));
  Renamer r(fresh);
  return r.run(f, renaming);
}

namespace {

using MacroPairs = std::set<std::pair<const MacroDef*, const MacroDef*>>;

bool equal_formulas(const Formula& a, const Formula& b, MacroPairs& same);

bool equal_macros(const MacroDef* a, const MacroDef* b, MacroPairs& same) {
  if (a == b || same.count({a, b})) return true;
  if (a->formals != b->formals || a->parameter != b->parameter) return false;
  same.insert({a, b});  // provisional; bodies cannot call their own definition
  if (equal_formulas(a->body, b->body, same)) return true;
  same.erase({a, b});
  return false;
}

bool equal_formulas(const Formula& a, const Formula& b, MacroPairs& same) {
  if (a.get() == b.get()) return true;
  if (a.op() != b.op() || a.first() != b.first() || a.second() != b.second() ||
      a.label() != b.label() || a.arity() != b.arity() || a.arguments() != b.arguments() ||
      a.has_domain() != b.has_domain())
    return false;
  if (a.op() == Op::Macro && !equal_macros(a.macro().get(), b.macro().get(), same)) return false;
  if (a.has_domain() &&
      (a.domain_variable() != b.domain_variable() || !equal_formulas(a.domain(), b.domain(), same)))
    return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!equal_formulas(a.child(i), b.child(i), same)) return false;
  return true;
}

}  // namespace

bool operator==(const Formula& a, const Formula& b) {
  MacroPairs same;
  return equal_formulas(a, b, same);
}

namespace {

int level(Op op) {
  switch (op) {
    case Op::Exists:
    case Op::Forall: return 0;
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Not: return 4;
    default: return 5;
  }
}

class Printer {
 public:
  Printer(std::ostream& out, FreshNames& fresh,
          const std::map<const MacroDef*, std::string>* names = nullptr)
      : out_(out), fresh_(fresh), names_(names) {}

  void print(const Formula& f, int min_level, const std::map<std::string, std::string>& env) {
    if (f.op() == Op::Macro && names_) {
      auto it = names_->find(f.macro().get());
      if (it == names_->end()) throw InvalidArgument("no name for macro " + f.macro()->name);
      out_ << it->second << '(';
      for (std::size_t i = 0; i < f.arguments().size(); ++i)
        out_ << (i ? "," : "") << map(env, f.arguments()[i]);
      out_ << ')';
      return;
    }
    if (f.op() == Op::Macro) {
      std::map<std::string, std::string> inner;
      const auto& formals = f.macro()->formals;
      for (std::size_t i = 0; i < formals.size(); ++i) inner[formals[i]] = map(env, f.arguments()[i]);
      print(f.macro()->body, min_level, inner);
      return;
    }
    bool parens = level(f.op()) < min_level;
    if (parens) out_ << '(';
    switch (f.op()) {
      case Op::True: out_ << "true"; break;
      case Op::False: out_ << "false"; break;
      case Op::Adj: out_ << "adj(" << map(env, f.first()) << ',' << map(env, f.second()) << ')'; break;
      case Op::Arc: out_ << "arc(" << map(env, f.first()) << ',' << map(env, f.second()) << ')'; break;
      case Op::Label: out_ << "lab_" << f.label() << '(' << map(env, f.first()) << ')'; break;
      case Op::Equal: out_ << map(env, f.first()) << " = " << map(env, f.second()); break;
      case Op::Member: out_ << map(env, f.first()) << " in " << map(env, f.second()); break;
      case Op::Not:
        out_ << '~';
        print(f.child(), 4, env);
        break;
      case Op::And:
        print(f.child(0), 3, env);
        out_ << " & ";
        print(f.child(1), 4, env);
        break;
      case Op::Or:
        print(f.child(0), 2, env);
        out_ << " | ";
        print(f.child(1), 3, env);
        break;
      case Op::Implies:
        print(f.child(0), 2, env);
        out_ << " -> ";
        print(f.child(1), 1, env);
        break;
      case Op::Exists:
      case Op::Forall: {
        std::string bound = f.first();
        for (const auto& [from, to] : env)
          if (to == bound && from != bound) {
            bound = is_set_variable(bound) ? fresh_.set() : fresh_.vertex();
            break;
          }
        auto inner = env;
        inner[f.first()] = bound;
        out_ << (f.op() == Op::Exists ? "E " : "A ") << bound;
        if (f.has_domain()) {
          // The domain has no free variables besides its own.
          out_ << '{' << f.domain_variable() << ": ";
          print(f.domain(), 0, {});
          out_ << '}';
        }
        out_ << ". ";
        print(f.child(), 0, inner);
        break;
      }
      case Op::Macro: break;
    }
    if (parens) out_ << ')';
  }

 private:
  static const std::string& map(const std::map<std::string, std::string>& env, const std::string& n) {
    auto it = env.find(n);
    return it == env.end() ? n : it->second;
  }

  std::ostream& out_;
  FreshNames& fresh_;
  const std::map<const MacroDef*, std::string>* names_;
};

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream out;
  FreshNames fresh(names_used(f));
  Printer p(out, fresh);
  p.print(f, 0, {});
  return out.str();
}

std::string to_string_with_calls(const Formula& f,
                                 const std::map<const MacroDef*, std::string>& names) {
  std::ostringstream out;
  FreshNames fresh(names_used(f));
  Printer p(out, fresh, &names);
  p.print(f, 0, {});
  return out.str();
}

}  // namespace msowb
