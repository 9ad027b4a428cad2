#include "msowb/io.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "msowb/error.hpp"
#include "msowb/parser.hpp"

namespace msowb {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& what) {
  throw FormatError("line " + std::to_string(l.number) + ": " + what);
}

long long integer(const Line& l, const std::string& token) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) fail(l, "expected an integer, got '" + token + "'");
  return v;
}

Vertex vertex(const Line& l, const std::string& token, std::size_t n) {
  long long v = integer(l, token);
  if (v < 0 || static_cast<std::size_t>(v) >= n) fail(l, "vertex " + token + " out of range");
  return static_cast<Vertex>(v);
}

void arity(const Line& l, std::size_t count) {
  if (l.tokens.size() != count) fail(l, "'" + l.tokens[0] + "' takes " + std::to_string(count - 1) + " arguments");
}

// Reads the `graph N` / `e U V` part and hands every other line to `other`.
template <class Other>
Graph read_graph_with(const std::vector<Line>& lines, Other other) {
  Graph g;
  bool seen = false;
  for (const Line& l : lines) {
    const std::string& d = l.tokens[0];
    if (d == "graph") {
      arity(l, 2);
      if (seen) fail(l, "second graph header");
      long long n = integer(l, l.tokens[1]);
      if (n < 0) fail(l, "negative order");
      g = Graph(static_cast<std::size_t>(n));
      seen = true;
    } else if (d == "e") {
      if (!seen) fail(l, "edge before graph header");
      arity(l, 3);
      Vertex u = vertex(l, l.tokens[1], g.order());
      Vertex v = vertex(l, l.tokens[2], g.order());
      if (u == v) fail(l, "loop");
      g.add_edge(u, v);
    } else if (!seen) {
      fail(l, "expected 'graph N' first");
    } else if (!other(l, g)) {
      fail(l, "unknown directive '" + d + "'");
    }
  }
  if (!seen) throw FormatError("missing 'graph N' header");
  return g;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string write_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph read_graph(const std::string& text) {
  return read_graph_with(tokenize(text), [](const Line&, Graph&) { return false; });
}

std::string write_digraph(const Digraph& d) {
  std::string out = "digraph " + std::to_string(d.order()) + "\n";
  for (auto [u, v] : d.arcs()) out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Digraph read_digraph(const std::string& text) {
  Digraph d;
  bool seen = false;
  for (const Line& l : tokenize(text)) {
    if (l.tokens[0] == "digraph") {
      arity(l, 2);
      if (seen) fail(l, "second digraph header");
      long long n = integer(l, l.tokens[1]);
      if (n < 0) fail(l, "negative order");
      d = Digraph(static_cast<std::size_t>(n));
      seen = true;
    } else if (l.tokens[0] == "a") {
      if (!seen) fail(l, "arc before digraph header");
      arity(l, 3);
      Vertex u = vertex(l, l.tokens[1], d.order());
      Vertex v = vertex(l, l.tokens[2], d.order());
      if (u == v) fail(l, "loop");
      d.add_arc(u, v);
    } else {
      fail(l, "unknown directive '" + l.tokens[0] + "'");
    }
  }
  if (!seen) throw FormatError("missing 'digraph N' header");
  return d;
}

std::string write_labeled_graph(const LabeledGraph& g) {
  std::string out = write_graph(g.graph());
  if (g.alphabet().empty()) return out;
  out += "alphabet " + join(g.alphabet(), " ") + "\n";
  for (Vertex v = 0; v < g.graph().order(); ++v) {
    auto labels = g.labels_of(v);
    if (!labels.empty()) out += "l " + std::to_string(v) + " " + join(labels, ",") + "\n";
  }
  return out;
}

LabeledGraph read_labeled_graph(const std::string& text) {
  auto lines = tokenize(text);
  std::vector<std::string> alphabet;
  std::vector<std::pair<const Line*, Vertex>> pending;
  bool have_alphabet = false;
  Graph g = read_graph_with(lines, [&](const Line& l, Graph& g) {
    if (l.tokens[0] == "alphabet") {
      if (have_alphabet) fail(l, "second alphabet");
      alphabet.assign(l.tokens.begin() + 1, l.tokens.end());
      std::set<std::string> distinct(alphabet.begin(), alphabet.end());
      if (distinct.size() != alphabet.size()) fail(l, "repeated label in alphabet");
      have_alphabet = true;
      return true;
    }
    if (l.tokens[0] == "l") {
      arity(l, 3);
      pending.emplace_back(&l, vertex(l, l.tokens[1], g.order()));
      return true;
    }
    return false;
  });
  LabeledGraph out(std::move(g), alphabet);
  for (auto [l, v] : pending)
    for (const auto& name : split(l->tokens[2], ',')) {
      if (out.label_index(name) < 0) fail(*l, "label '" + name + "' not in the alphabet");
      out.add_label(v, name);
    }
  return out;
}

std::string write_grid_like(const GridLikeGraph& g) {
  std::string out = write_graph(g.graph);
  for (std::size_t i = 0; i < g.paths.size(); ++i) {
    out += g.classes.size() > i && g.classes[i] == PathClass::Black ? "p black" : "p white";
    for (Vertex v : g.paths[i]) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

GridLikeGraph read_grid_like(const std::string& text) {
  GridLikeGraph out;
  out.graph = read_graph_with(tokenize(text), [&](const Line& l, Graph& g) {
    if (l.tokens[0] != "p") return false;
    if (l.tokens.size() < 2) fail(l, "path needs a class");
    if (l.tokens[1] == "white") out.classes.push_back(PathClass::White);
    else if (l.tokens[1] == "black") out.classes.push_back(PathClass::Black);
    else fail(l, "path class must be white or black");
    Path p;
    for (std::size_t i = 2; i < l.tokens.size(); ++i) p.push_back(vertex(l, l.tokens[i], g.order()));
    out.paths.push_back(std::move(p));
    return true;
  });
  return out;
}

std::string write_colouring(const EdgeColouring& c) {
  std::string out;
  for (const auto& [e, col] : c.colours)
    out += "c " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(col) + "\n";
  return out;
}

EdgeColouring read_colouring(const std::string& text) {
  EdgeColouring out;
  for (const Line& l : tokenize(text)) {
    if (l.tokens[0] != "c") fail(l, "unknown directive '" + l.tokens[0] + "'");
    arity(l, 4);
    long long u = integer(l, l.tokens[1]);
    long long v = integer(l, l.tokens[2]);
    long long col = integer(l, l.tokens[3]);
    if (u < 0 || v < 0 || u == v) fail(l, "bad edge");
    if (col < 1) fail(l, "colours start at 1");
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!out.colours.emplace(e, static_cast<int>(col)).second) fail(l, "edge coloured twice");
  }
  return out;
}

std::string write_instance(const SigmaColInstance& inst) {
  std::string out = write_graph(inst.graph);
  out += "k " + std::to_string(inst.k) + "\n";
  for (std::size_t i = 0; i < inst.partition.size(); ++i) {
    out += "part " + std::to_string(i);
    for (Vertex v : inst.partition[i]) out += " " + std::to_string(v);
    out += "\n";
  }
  for (const auto& [v, c] : inst.precolouring)
    out += "f0 " + std::to_string(v) + " " + std::to_string(c) + "\n";
  return out;
}

SigmaColInstance read_instance(const std::string& text) {
  SigmaColInstance inst;
  bool have_k = false;
  std::map<long long, std::vector<Vertex>> parts;
  inst.graph = read_graph_with(tokenize(text), [&](const Line& l, Graph& g) {
    const std::string& d = l.tokens[0];
    if (d == "k") {
      arity(l, 2);
      inst.k = static_cast<int>(integer(l, l.tokens[1]));
      have_k = true;
    } else if (d == "part") {
      if (l.tokens.size() < 2) fail(l, "part needs an index");
      long long i = integer(l, l.tokens[1]);
      if (i < 0) fail(l, "negative block index");
      auto& block = parts[i];
      for (std::size_t j = 2; j < l.tokens.size(); ++j) block.push_back(vertex(l, l.tokens[j], g.order()));
    } else if (d == "f0") {
      arity(l, 3);
      Vertex v = vertex(l, l.tokens[1], g.order());
      if (!inst.precolouring.emplace(v, static_cast<int>(integer(l, l.tokens[2]))).second)
        fail(l, "vertex precoloured twice");
    } else {
      return false;
    }
    return true;
  });
  if (!have_k) throw FormatError("missing 'k K' line");
  if (inst.k < 1) throw FormatError("k must be positive");
  inst.partition.assign(inst.k + 1, {});
  for (auto& [i, block] : parts) {
    if (i > inst.k) throw FormatError("block index " + std::to_string(i) + " exceeds k");
    inst.partition[i] = std::move(block);
  }
  try {
    validate(inst);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("invalid instance: ") + e.what());
  }
  return inst;
}

std::string write_qdimacs(const QbfFormula& q) {
  std::string out = "p cnf " + std::to_string(q.variables) + " " + std::to_string(q.clauses.size()) + "\n";
  for (const auto& b : q.blocks) {
    if (b.variables.empty()) continue;
    out += b.existential ? "e" : "a";
    for (int x : b.variables) out += " " + std::to_string(x);
    out += " 0\n";
  }
  for (const auto& c : q.clauses) {
    for (int l : c) out += std::to_string(l) + " ";
    out += "0\n";
  }
  return out;
}

QbfFormula read_qdimacs(const std::string& text) {
  QbfFormula q;
  bool header = false;
  long long declared_clauses = 0;
  std::vector<QbfBlock> blocks;
  std::vector<int> pending;  // clause literals spanning lines
  std::set<int> quantified;
  for (const Line& l : tokenize(text)) {
    const std::string& d = l.tokens[0];
    if (d == "c") continue;
    if (d == "p") {
      if (header) fail(l, "second problem line");
      if (l.tokens.size() != 4 || l.tokens[1] != "cnf") fail(l, "expected 'p cnf V C'");
      long long v = integer(l, l.tokens[2]);
      declared_clauses = integer(l, l.tokens[3]);
      if (v < 0 || declared_clauses < 0) fail(l, "negative count");
      q.variables = static_cast<int>(v);
      header = true;
      continue;
    }
    if (!header) fail(l, "expected 'p cnf V C' first");
    if (d == "e" || d == "a") {
      if (!q.clauses.empty() || !pending.empty()) fail(l, "quantifier line after clauses");
      if (l.tokens.back() != "0") fail(l, "quantifier line must end with 0");
      QbfBlock b{d == "e", {}};
      for (std::size_t i = 1; i + 1 < l.tokens.size(); ++i) {
        long long x = integer(l, l.tokens[i]);
        if (x < 1 || x > q.variables) fail(l, "variable " + l.tokens[i] + " out of range");
        if (!quantified.insert(static_cast<int>(x)).second) fail(l, "variable " + l.tokens[i] + " quantified twice");
        b.variables.push_back(static_cast<int>(x));
      }
      if (!blocks.empty() && blocks.back().existential == b.existential)
        blocks.back().variables.insert(blocks.back().variables.end(), b.variables.begin(), b.variables.end());
      else
        blocks.push_back(std::move(b));
      continue;
    }
    for (const auto& t : l.tokens) {
      long long x = integer(l, t);
      if (x == 0) {
        q.clauses.push_back(pending);
        pending.clear();
      } else {
        if (std::abs(x) > q.variables) fail(l, "literal " + t + " out of range");
        pending.push_back(static_cast<int>(x));
      }
    }
  }
  if (!header) throw FormatError("missing 'p cnf V C' line");
  if (!pending.empty()) throw FormatError("last clause is not terminated by 0");
  if (static_cast<long long>(q.clauses.size()) != declared_clauses)
    throw FormatError("declared " + std::to_string(declared_clauses) + " clauses, found " +
                      std::to_string(q.clauses.size()));
  std::vector<int> free;
  for (int x = 1; x <= q.variables; ++x)
    if (!quantified.count(x)) free.push_back(x);
  if (!free.empty()) {
    if (!blocks.empty() && blocks.front().existential)
      blocks.front().variables.insert(blocks.front().variables.begin(), free.begin(), free.end());
    else
      blocks.insert(blocks.begin(), QbfBlock{true, free});
  }
  if (blocks.empty() || !blocks.front().existential) blocks.insert(blocks.begin(), QbfBlock{true, {}});
  if (!blocks.back().existential) blocks.push_back(QbfBlock{true, {}});
  q.blocks = std::move(blocks);
  validate(q);
  return q;
}

std::string write_interpretation(const Interpretation& i) {
  std::vector<Formula> roots{i.alpha, i.beta_adj};
  for (const auto& [label, beta] : i.beta_labels) roots.push_back(beta);
  PrintedDocuments docs = print_documents(roots);
  std::string out = docs.definitions;
  out += "name: " + i.name + "\n";
  out += "vars: " + i.x + " " + i.y + "\n";
  out += "alpha: " + docs.formulas[0] + "\n";
  out += "beta_adj: " + docs.formulas[1] + "\n";
  std::size_t k = 2;
  for (const auto& [label, beta] : i.beta_labels) out += "beta_lab_" + label + ": " + docs.formulas[k++] + "\n";
  return out;
}

Interpretation read_interpretation(const std::string& text) {
  // `key: value` lines cannot occur inside a formula, so they delimit the entries
  static const std::regex kEntry(R"(^\s*([A-Za-z_]\w*)\s*:(?!=)(.*)$)");
  std::istringstream in(text);
  std::string raw;
  std::string definitions;
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::smatch m;
    if (std::regex_match(raw, m, kEntry)) {
      entries.emplace_back(m[1], m[2]);
    } else if (!entries.empty() && raw.find_first_not_of(" \t") != std::string::npos &&
               raw[raw.find_first_not_of(" \t")] != '#') {
      throw FormatError("line " + std::to_string(number) + ": definitions must precede the entries");
    } else {
      definitions += raw + "\n";
    }
  }
  FormulaDocument defs = parse_document(definitions + "true");
  Interpretation out;
  bool have_alpha = false;
  bool have_adj = false;
  for (const auto& [key, value] : entries) {
    if (key == "name") {
      std::istringstream v(value);
      v >> out.name;
    } else if (key == "vars") {
      std::istringstream v(value);
      v >> out.x >> out.y;
    } else if (key == "alpha") {
      out.alpha = parse_document(value, defs.macros).formula;
      have_alpha = true;
    } else if (key == "beta_adj") {
      out.beta_adj = parse_document(value, defs.macros).formula;
      have_adj = true;
    } else if (key.rfind("beta_lab_", 0) == 0 && key.size() > 9) {
      out.beta_labels[key.substr(9)] = parse_document(value, defs.macros).formula;
    } else {
      throw FormatError("unknown interpretation entry '" + key + "'");
    }
  }
  if (!have_alpha || !have_adj) throw FormatError("interpretation needs alpha and beta_adj");
  validate(out);
  return out;
}

std::string write_anchors(const std::vector<Vertex>& anchors) {
  std::string out;
  for (std::size_t v = 0; v < anchors.size(); ++v)
    out += "anchor " + std::to_string(v) + " " + std::to_string(anchors[v]) + "\n";
  return out;
}

std::vector<std::pair<std::string, std::string>> write_reduced(const ReducedInstance& ri) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("host.txt", write_labeled_graph(ri.host));
  out.emplace_back("psi.txt", print_document(ri.psi));
  if (!ri.provenance) return out;
  const Provenance& p = *ri.provenance;
  out.emplace_back("source.txt", write_graph(p.f));
  out.emplace_back("phi.txt", print_document(p.phi));
  out.emplace_back("phi1.txt", print_document(p.phi1));
  out.emplace_back("i1.txt", write_interpretation(p.enc1.i1));
  out.emplace_back("i2.txt", write_interpretation(p.i2));
  out.emplace_back("h.txt", write_graph(p.enc1.h));
  out.emplace_back("anchors.txt", write_anchors(p.enc1.anchors));
  std::string h1 = write_graph(p.h1.graph);
  for (std::size_t v = 0; v < p.h1.paths.size(); ++v)
    h1 += "path " + std::to_string(v) + " " + std::to_string(p.h1.paths[v]) + "\n";
  out.emplace_back("h1.txt", h1);
  std::string stats = "# stage vertices edges formula_size\n";
  for (const auto& s : p.stats)
    stats += s.stage + " " + std::to_string(s.vertices) + " " + std::to_string(s.edges) + " " +
             std::to_string(s.formula_size) + "\n";
  stats += "grid " + std::to_string(p.advice.rows) + " " + std::to_string(p.advice.cols) + " colours " +
           std::to_string(p.enc2.colour_count) + "\n";
  out.emplace_back("stats.txt", stats);
  return out;
}

ReducedInstance read_reduced(const std::map<std::string, std::string>& files) {
  auto get = [&](const std::string& name) -> const std::string& {
    auto it = files.find(name);
    if (it == files.end()) throw FormatError("missing " + name);
    return it->second;
  };
  ReducedInstance ri;
  ri.host = read_labeled_graph(get("host.txt"));
  ri.psi = parse_document(get("psi.txt")).formula;
  auto p = std::make_shared<Provenance>();
  p->phi1 = parse_document(get("phi1.txt")).formula;
  p->i2 = read_interpretation(get("i2.txt"));
  int colours = 0;
  for (const auto& l : ri.host.alphabet())
    if (l.rfind("light_", 0) == 0) ++colours;
  p->enc2.colour_count = colours;
  p->enc2.host = ri.host;
  ri.provenance = std::move(p);
  return ri;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace msowb
