#include "msowb/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "msowb/error.hpp"

namespace msowb {

namespace {

enum class Tok { Ident, Number, LParen, RParen, LBracket, RBracket, Comma, Dot, Tilde, Amp, Bar,
                 Arrow, Eq, Define, Semicolon, LBrace, RBrace, Colon, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
          advance();
        t.kind = Tok::Ident;
        t.text = text_.substr(start, pos_ - start);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          advance();
        t.kind = Tok::Number;
        t.text = text_.substr(start, pos_ - start);
      } else if (c == '-' && peek(1) == '>') {
        t.kind = Tok::Arrow;
        advance();
        advance();
      } else if (c == ':' && peek(1) == '=') {
        t.kind = Tok::Define;
        advance();
        advance();
      } else {
        switch (c) {
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '[': t.kind = Tok::LBracket; break;
          case ']': t.kind = Tok::RBracket; break;
          case ',': t.kind = Tok::Comma; break;
          case '.': t.kind = Tok::Dot; break;
          case '~': t.kind = Tok::Tilde; break;
          case '&': t.kind = Tok::Amp; break;
          case '|': t.kind = Tok::Bar; break;
          case '=': t.kind = Tok::Eq; break;
          case ';': t.kind = Tok::Semicolon; break;
          case '{': t.kind = Tok::LBrace; break;
          case '}': t.kind = Tok::RBrace; break;
          case ':': t.kind = Tok::Colon; break;
          default:
            throw SyntaxError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::Define: return "':='";
    case Tok::Semicolon: return "';'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Colon: return "':'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const std::vector<std::shared_ptr<const MacroDef>>& known)
      : tokens_(std::move(tokens)) {
    for (const auto& m : known) macros_[m->name] = m;
  }

  FormulaDocument document() {
    FormulaDocument doc;
    while (at(Tok::Ident) && cur().text == "def") doc.macros.push_back(definition());
    doc.formula = implication();
    expect(Tok::End);
    return doc;
  }

 private:
  const Token& cur() const { return tokens_[pos_]; }
  bool at(Tok k) const { return cur().kind == k; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what, cur().line, cur().column);
  }

  Token expect(Tok k) {
    if (!at(k)) fail(std::string("expected ") + describe(k) + ", found " + found());
    return tokens_[pos_++];
  }

  std::string found() const {
    return at(Tok::Ident) || at(Tok::Number) ? "'" + cur().text + "'" : describe(cur().kind);
  }

  template <typename Build>
  Formula located(const Token& at_token, Build&& build) {
    try {
      return build();
    } catch (const KindError& e) {
      throw KindError(std::string(e.what()) + " at " + std::to_string(at_token.line) + ":" +
                      std::to_string(at_token.column));
    }
  }

  std::shared_ptr<const MacroDef> definition() {
    Token head = tokens_[pos_++];
    Token name = expect(Tok::Ident);
    if (!std::islower(static_cast<unsigned char>(name.text[0])) || keyword(name.text))
      throw SyntaxError("invalid definition name '" + name.text + "'", name.line, name.column);
    if (macros_.count(name.text))
      throw SyntaxError("duplicate definition '" + name.text + "'", name.line, name.column);
    int parameter = 0;
    if (at(Tok::LBracket)) {
      ++pos_;
      parameter = std::stoi(expect(Tok::Number).text);
      expect(Tok::RBracket);
    }
    std::vector<std::string> formals = name_list();
    expect(Tok::Define);
    Formula body = implication();
    expect(Tok::Semicolon);
    std::shared_ptr<const MacroDef> def;
    located(head, [&] {
      def = make_macro(name.text, formals, body, parameter);
      return Formula();
    });
    macros_[name.text] = def;
    return def;
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> names;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      names.push_back(expect(Tok::Ident).text);
      while (at(Tok::Comma)) {
        ++pos_;
        names.push_back(expect(Tok::Ident).text);
      }
    }
    expect(Tok::RParen);
    return names;
  }

  static bool keyword(const std::string& s) {
    return s == "adj" || s == "arc" || s == "in" || s == "true" || s == "false" || s == "def" ||
           s == "E" || s == "A" || s.rfind("lab_", 0) == 0;
  }

  Formula implication() {
    Formula left = disjunction();
    if (at(Tok::Arrow)) {
      ++pos_;
      return implies(left, implication());
    }
    return left;
  }

  Formula disjunction() {
    Formula left = conjunction();
    while (at(Tok::Bar)) {
      ++pos_;
      left = left || conjunction();
    }
    return left;
  }

  Formula conjunction() {
    Formula left = unary();
    while (at(Tok::Amp)) {
      ++pos_;
      left = left && unary();
    }
    return left;
  }

  Formula unary() {
    if (at(Tok::Tilde)) {
      ++pos_;
      return !unary();
    }
    if (at(Tok::Ident) && (cur().text == "E" || cur().text == "A") &&
        tokens_[pos_ + 1].kind == Tok::Ident) {
      Token q = tokens_[pos_++];
      Token var = expect(Tok::Ident);
      if (keyword(var.text))
        throw SyntaxError("invalid bound variable '" + var.text + "'", var.line, var.column);
      std::string domain_var;
      Formula domain;
      bool restricted = false;
      if (at(Tok::LBrace)) {
        ++pos_;
        domain_var = expect(Tok::Ident).text;
        expect(Tok::Colon);
        domain = implication();
        expect(Tok::RBrace);
        restricted = true;
      }
      expect(Tok::Dot);
      Formula body = implication();
      if (restricted)
        return located(var, [&] {
          return q.text == "E" ? exists_within(var.text, domain_var, domain, body)
                               : forall_within(var.text, domain_var, domain, body);
        });
      return located(var, [&] { return q.text == "E" ? exists(var.text, body) : forall(var.text, body); });
    }
    return primary();
  }

  Formula primary() {
    if (at(Tok::LParen)) {
      ++pos_;
      Formula inner = implication();
      expect(Tok::RParen);
      return inner;
    }
    Token t = expect(Tok::Ident);
    if (t.text == "true") return top();
    if (t.text == "false") return bottom();
    if (t.text == "adj" || t.text == "arc") {
      auto args = name_list();
      if (args.size() != 2)
        throw SyntaxError(t.text + " takes two arguments", t.line, t.column);
      return located(t, [&] { return t.text == "adj" ? adj(args[0], args[1]) : arc(args[0], args[1]); });
    }
    if (t.text.rfind("lab_", 0) == 0) {
      std::string name = t.text.substr(4);
      if (name.empty()) throw SyntaxError("empty label name", t.line, t.column);
      auto args = name_list();
      if (args.size() != 1) throw SyntaxError("label predicates take one argument", t.line, t.column);
      return located(t, [&] { return label(name, args[0]); });
    }
    if (at(Tok::LParen)) {
      auto it = macros_.find(t.text);
      if (it == macros_.end())
        throw SyntaxError("unknown predicate '" + t.text + "'", t.line, t.column);
      auto args = name_list();
      return located(t, [&] { return msowb::apply(it->second, args); });
    }
    if (keyword(t.text)) throw SyntaxError("unexpected '" + t.text + "'", t.line, t.column);
    if (at(Tok::Eq)) {
      ++pos_;
      Token rhs = expect(Tok::Ident);
      return located(t, [&] { return equal(t.text, rhs.text); });
    }
    if (at(Tok::Ident) && cur().text == "in") {
      ++pos_;
      Token rhs = expect(Tok::Ident);
      return located(t, [&] { return member(t.text, rhs.text); });
    }
    fail("expected '=' or 'in' after '" + t.text + "', found " + found());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::shared_ptr<const MacroDef>> macros_;
};

}  // namespace

Formula parse_formula(const std::string& text) {
  FormulaDocument doc = parse_document(text);
  if (!doc.macros.empty()) throw SyntaxError("definitions are not allowed here", 1, 1);
  return doc.formula;
}

FormulaDocument parse_document(const std::string& text,
                               const std::vector<std::shared_ptr<const MacroDef>>& known) {
  Parser p(Lexer(text).run(), known);
  return p.document();
}

std::string print_document(const Formula& f) {
  PrintedDocuments d = print_documents({f});
  return d.definitions + d.formulas[0] + "\n";
}

PrintedDocuments print_documents(const std::vector<Formula>& roots) {
  // Collect definitions reachable from f, dependencies first.
  std::vector<const MacroDef*> order;
  std::set<const MacroDef*> seen;
  std::function<void(const Formula&)> visit = [&](const Formula& g) {
    if (g.op() == Op::Macro) {
      const MacroDef* def = g.macro().get();
      if (seen.insert(def).second) {
        visit(def->body);
        order.push_back(def);
      }
      return;
    }
    for (std::size_t i = 0; i < g.arity(); ++i) visit(g.child(i));
    if (g.has_domain()) visit(g.domain());
  };
  for (const auto& f : roots) visit(f);

  std::map<const MacroDef*, std::string> names;
  std::set<std::string> taken;
  for (const MacroDef* def : order) {
    std::string name = def->name;
    for (int k = 2; !taken.insert(name).second; ++k) name = def->name + "_" + std::to_string(k);
    names[def] = name;
  }

  PrintedDocuments out;
  for (const MacroDef* def : order) {
    std::string& d = out.definitions;
    d += "def " + names[def];
    if (def->parameter != 0) d += "[" + std::to_string(def->parameter) + "]";
    d += "(";
    for (std::size_t i = 0; i < def->formals.size(); ++i)
      d += (i ? ", " : "") + def->formals[i];
    d += ") := " + to_string_with_calls(def->body, names) + ";\n";
  }
  for (const auto& f : roots) out.formulas.push_back(to_string_with_calls(f, names));
  return out;
}

}  // namespace msowb
