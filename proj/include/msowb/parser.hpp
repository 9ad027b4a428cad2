#pragma once

#include <memory>
#include <string>
#include <vector>

#include "msowb/formula.hpp"

namespace msowb {

/// Parses the ASCII formula grammar:
///
///   adj(x,y)  arc(x,y)  lab_NAME(x)  x = y  x in X  true  false
///   ~F   F & G   F | G   F -> G   E x. F   A x. F   E X. F   A X. F
///
/// Precedence ~ > & > | > ->, with & and | left-associative and ->
/// right-associative. A quantifier's scope extends as far right as possible.
/// A set quantifier may carry a domain, `E X{v: F}. G`, restricting X to
/// subsets of { v : F }. `#` starts a comment running to the end of the line.
///
/// Throws SyntaxError (with 1-based line and column) on malformed text and
/// KindError when a vertex name is used as a set or vice versa.
Formula parse_formula(const std::string& text);

/// A formula file may open with named predicate definitions
///
///   def name(x, y) := F;
///   def name[3](x) := F;     (with an integer parameter)
///
/// after which `name(u, v)` may be used as an atom. Definitions may refer to
/// earlier ones.
struct FormulaDocument {
  std::vector<std::shared_ptr<const MacroDef>> macros;
  Formula formula;
};

/// `known` definitions may be called without being repeated in the text.
FormulaDocument parse_document(const std::string& text,
                               const std::vector<std::shared_ptr<const MacroDef>>& known = {});

/// Prints f keeping named predicates as definitions (in dependency order)
/// instead of expanding them. Printing the parsed result again gives the same
/// text. Distinct definitions sharing a name get numeric suffixes.
std::string print_document(const Formula& f);

/// Several formulas sharing one block of definitions.
struct PrintedDocuments {
  std::string definitions;  // one `def ...;` line per definition
  std::vector<std::string> formulas;
};

PrintedDocuments print_documents(const std::vector<Formula>& roots);

}  // namespace msowb
