#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "msowb/formula.hpp"
#include "msowb/graph.hpp"

namespace msowb {

/// Read-only view of the structure a formula is evaluated on: either a
/// labeled undirected graph (signature adj + labels) or a digraph (signature
/// arc). The viewed object must outlive the view.
class Structure {
 public:
  explicit Structure(const LabeledGraph& g);
  explicit Structure(const Digraph& d);

  std::size_t order() const { return n_; }
  bool directed() const { return digraph_ != nullptr; }
  bool adjacent(Vertex u, Vertex v) const;
  bool arc(Vertex u, Vertex v) const;
  /// Neighbours in the underlying undirected graph.
  const std::vector<Vertex>& neighbours(Vertex v) const { return neighbours_[v]; }
  int label_index(const std::string& name) const;
  bool has_label(Vertex v, int index) const;

  const LabeledGraph* labeled() const { return labeled_; }
  const Digraph* digraph() const { return digraph_; }

 private:
  bool bit(Vertex u, Vertex v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u; }

  const LabeledGraph* labeled_ = nullptr;
  const Digraph* digraph_ = nullptr;
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;  // adjacency (or arc) matrix, one bit row per vertex
  std::vector<std::vector<Vertex>> neighbours_;
};

/// A native decision procedure standing in for a named predicate.
using HookFn = std::function<bool(std::span<const Vertex> args)>;
/// Builds the procedure for one structure and the predicate's parameter; the
/// result may precompute and cache whatever it needs.
using HookFactory = std::function<HookFn(const Structure& s, int parameter)>;

/// Named predicates (MacroDef::name) that evaluation may decide natively
/// instead of expanding their bodies.
class HookRegistry {
 public:
  void add(const std::string& name, HookFactory factory) { hooks_[name] = std::move(factory); }
  const HookFactory* find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, HookFactory> hooks_;
};

struct Assignment {
  std::map<std::string, Vertex> vertices;
  std::map<std::string, std::vector<Vertex>> sets;
};

struct EvalOptions {
  /// Honour set-quantifier domains and enumerate vertex quantifiers over the
  /// vertices satisfying their guard conjuncts. Turning this off gives the
  /// plain unrestricted semantics, used to test the restriction is sound.
  bool restrict_domains = true;
  /// Cache the value of quantified subformulas with at most two free vertex
  /// variables and no free set variable.
  bool memoise = true;
};

/// Largest set a set quantifier may range over.
inline constexpr std::size_t kSetDomainCeiling = 30;

/// Model checker for MSO1-L by exhaustive quantifier expansion.
///
/// A sentence with s set quantifiers and v vertex quantifiers is decided on an
/// n-vertex structure with at most 2^(s*n) * n^v atomic checks, up to a
/// constant factor. A maximal run of directly nested set quantifiers of one
/// kind is decided together: membership is fixed vertex by vertex and a branch
/// is cut once the body's Kleene value under the partial sets is determined.
///
/// Formulas are compiled once and can then be queried for many argument
/// tuples; memo tables persist across queries on the same evaluator.
/// Throws EvalError for unbound variables, unknown labels and atoms outside
/// the structure's signature, CapacityError for oversized set domains.
class Evaluator {
 public:
  explicit Evaluator(const Structure& s, const HookRegistry* hooks = nullptr,
                     EvalOptions options = {});
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  /// Compiles f with the given free variables as parameters; returns a handle.
  int compile(const Formula& f, const std::vector<std::string>& vertex_params,
              const std::vector<std::string>& set_params = {});
  bool holds(int query, std::span<const Vertex> vertices,
             std::span<const std::vector<Vertex>> sets = {});

  const Structure& structure() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool evaluate(const LabeledGraph& g, const Formula& f, const Assignment& env = {},
              const HookRegistry* hooks = nullptr, EvalOptions options = {});
bool evaluate(const Digraph& d, const Formula& f, const Assignment& env = {},
              const HookRegistry* hooks = nullptr, EvalOptions options = {});
/// Unlabeled graph convenience overload.
bool evaluate(const Graph& g, const Formula& f, const Assignment& env = {},
              const HookRegistry* hooks = nullptr, EvalOptions options = {});

}  // namespace msowb
