// Command-line front end. Exit status: 0 true, 1 false, 2 usage or input
// error, 3 internal disagreement.

#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "msowb/error.hpp"
#include "msowb/eval.hpp"
#include "msowb/io.hpp"
#include "msowb/parser.hpp"
#include "msowb/pipeline.hpp"
#include "msowb/sigmacol.hpp"
#include "msowb/strongcolor.hpp"

using namespace msowb;
using nlohmann::json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kMismatch = 3;

// Undirected graphs above this order are not checked directly by `verify`.
constexpr std::size_t kDirectCheckCeiling = 8;

bool json_output = false;

int emit(const json& j, const std::string& text, int code) {
  if (json_output)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return code;
}

bool is_digraph_text(const std::string& text) {
  for (std::size_t i = text.find_first_not_of(" \t\r\n"); i != std::string::npos;) {
    if (text[i] == '#') {
      i = text.find('\n', i);
      if (i != std::string::npos) i = text.find_first_not_of(" \t\r\n", i);
      continue;
    }
    return text.compare(i, 8, "digraph ") == 0;
  }
  return false;
}

bool is_qdimacs_text(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c' || line[first] == '#') continue;
    return line[first] == 'p';
  }
  return false;
}

int cmd_parse(const std::string& path) {
  FormulaDocument doc = parse_document(read_file(path));
  const Formula& f = doc.formula;
  std::string printed = print_document(f);
  json j{{"formula", printed},
         {"size", formula_size(f)},
         {"sentence", is_sentence(f)},
         {"set_quantifiers", set_quantifier_count(f)},
         {"vertex_quantifiers", vertex_quantifier_count(f)},
         {"labels", labels_used(f)}};
  return emit(j, printed + "\n", kTrue);
}

int cmd_check(const std::string& graph_path, const std::string& formula_path) {
  std::string text = read_file(graph_path);
  Formula f = parse_document(read_file(formula_path)).formula;
  bool value = is_digraph_text(text) ? evaluate(read_digraph(text), f) : evaluate(read_labeled_graph(text), f);
  return emit(json{{"value", value}}, value ? "true\n" : "false\n", value ? kTrue : kFalse);
}

int cmd_reduce(const std::string& graph_path, const std::string& formula_path, const std::string& out) {
  Graph g = read_graph(read_file(graph_path));
  Formula phi = parse_document(read_file(formula_path)).formula;
  ReducedInstance ri = reduce_instance(g, phi);
  auto files = write_reduced(ri);
  json j;
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    for (const auto& [name, content] : files) write_file((std::filesystem::path(out) / name).string(), content);
  }
  std::string text;
  for (const auto& s : ri.provenance->stats) {
    j["stats"].push_back({{"stage", s.stage}, {"vertices", s.vertices}, {"edges", s.edges}, {"formula_size", s.formula_size}});
    text += s.stage + ": " + std::to_string(s.vertices) + " vertices, " + std::to_string(s.edges) + " edges, formula size " +
            std::to_string(s.formula_size) + "\n";
  }
  if (out.empty() || json_output)
    for (const auto& [name, content] : files) j["files"][name] = content;
  if (out.empty() && !json_output)
    for (const auto& [name, content] : files) text += "== " + name + "\n" + content;
  return emit(j, text, kTrue);
}

int cmd_verify(const std::string& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files[entry.path().filename().string()] = read_file(entry.path().string());
  ReducedInstance ri = read_reduced(files);
  bool reduced = check_reduced(ri);
  json j{{"reduced", reduced}};
  std::string text = std::string("reduced: ") + (reduced ? "true" : "false") + "\n";
  if (files.count("source.txt") && files.count("phi.txt")) {
    Graph f = read_graph(files["source.txt"]);
    if (f.order() <= kDirectCheckCeiling) {
      bool direct = evaluate(f, parse_document(files["phi.txt"]).formula);
      j["direct"] = direct;
      text += std::string("direct: ") + (direct ? "true" : "false") + "\n";
      if (direct != reduced) {
        j["agree"] = false;
        return emit(j, text + "MISMATCH\n", kMismatch);
      }
      j["agree"] = true;
    }
  }
  return emit(j, text, reduced ? kTrue : kFalse);
}

int cmd_sigmacol_reduce(const std::string& path, const std::string& out) {
  QbfFormula q = read_qdimacs(read_file(path));
  SigmaColInstance inst = reduce_qsat_to_sigmacol(q);
  HonestyReport h = reduction_honesty(q, inst);
  std::string text = write_instance(inst);
  if (!out.empty()) write_file(out, text);
  json j{{"instance", text},
         {"vertices", inst.graph.order()},
         {"edges", inst.graph.size()},
         {"input_size", h.input_size},
         {"output_size", h.output_size},
         {"honest", h.holds}};
  return emit(j, out.empty() ? text : "", kTrue);
}

int cmd_sigmacol_solve(const std::string& path, bool via_formula) {
  std::string text = read_file(path);
  json j;
  std::string out;
  bool value;
  if (is_qdimacs_text(text)) {
    QbfFormula q = read_qdimacs(text);
    SigmaColInstance inst = reduce_qsat_to_sigmacol(q);
    bool qbf = evaluate_qbf(q);
    value = decide_alternating(inst);
    j["qbf"] = qbf;
    out += std::string("qbf: ") + (qbf ? "true" : "false") + "\n";
    if (qbf != value) {
      j["colouring_game"] = value;
      return emit(j, out + "colouring game disagrees\n", kMismatch);
    }
    if (via_formula) {
      bool f = sigmacol_formula_holds(instance_to_labeled_graph(inst), inst.k);
      j["formula"] = f;
      out += std::string("formula: ") + (f ? "true" : "false") + "\n";
      if (f != value) return emit(j, out + "formula disagrees\n", kMismatch);
    }
  } else {
    SigmaColInstance inst = read_instance(text);
    value = decide_alternating(inst);
    if (via_formula) {
      bool f = sigmacol_formula_holds(instance_to_labeled_graph(inst), inst.k);
      j["formula"] = f;
      out += std::string("formula: ") + (f ? "true" : "false") + "\n";
      if (f != value) return emit(j, out + "formula disagrees\n", kMismatch);
    }
  }
  j["colouring_game"] = value;
  out += std::string("colouring game: ") + (value ? "true" : "false") + "\n";
  return emit(j, out, value ? kTrue : kFalse);
}

int cmd_sigmacol_formula(int k) {
  Formula f = sigmacol_formula(k);
  std::string printed = print_document(f);
  json j{{"formula", printed}, {"alphabet", sigmacol_alphabet(k)}, {"set_quantifiers", set_quantifier_count(f)}};
  return emit(j, printed + "\n", kTrue);
}

int cmd_color(const std::string& path) {
  Graph g = read_graph(read_file(path));
  EdgeColouring c = strong_edge_colour(g);
  bool valid = validate_strong(g, c);
  std::string text = write_colouring(c);
  json j{{"colouring", text}, {"colours", c.colour_count()}, {"valid", valid}};
  return emit(j, text + "# colours " + std::to_string(c.colour_count()) + "\n", valid ? kTrue : kMismatch);
}

int cmd_grid(std::size_t rows, std::size_t cols) {
  GridLikeGraph g = make_grid(rows, cols);
  std::string text = write_grid_like(g);
  json j{{"grid", text}, {"vertices", g.graph.order()}, {"edges", g.graph.size()}, {"paths", g.paths.size()}};
  return emit(j, text, kTrue);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MSO1 model checking workbench"};
  app.require_subcommand(1);
  app.add_flag("--json", json_output, "print a JSON bundle instead of text");

  std::string a, b, out;
  std::size_t rows = 0, cols = 0;
  int k = 1;
  bool via_formula = false;

  auto* parse = app.add_subcommand("parse", "parse and normalise a formula file");
  parse->add_option("formula", a)->required();
  auto* check = app.add_subcommand("check", "evaluate a formula on a graph by brute force");
  check->add_option("graph", a)->required();
  check->add_option("formula", b)->required();
  auto* reduce = app.add_subcommand("reduce", "reduce (graph, sentence) to a labeled grid instance");
  reduce->add_option("graph", a)->required();
  reduce->add_option("formula", b)->required();
  reduce->add_option("--out", out, "directory for the instance files");
  auto* verify = app.add_subcommand("verify", "decide a reduced instance and compare with the source");
  verify->add_option("dir", a)->required();
  auto* sigmacol = app.add_subcommand("sigmacol", "alternating colouring game");
  sigmacol->require_subcommand(1);
  auto* sc_reduce = sigmacol->add_subcommand("reduce", "QDIMACS to colouring game");
  sc_reduce->add_option("qbf", a)->required();
  sc_reduce->add_option("--out", out, "instance file");
  auto* sc_solve = sigmacol->add_subcommand("solve", "decide an instance or a QDIMACS file");
  sc_solve->add_option("input", a)->required();
  sc_solve->add_flag("--formula", via_formula, "also evaluate sigma_k on the labeled instance");
  auto* sc_formula = sigmacol->add_subcommand("formula", "print sigma_k");
  sc_formula->add_option("k", k)->required();
  auto* color = app.add_subcommand("color", "greedy strong edge colouring");
  color->add_option("graph", a)->required();
  auto* grid = app.add_subcommand("grid", "print a grid with its paths");
  grid->add_option("rows", rows)->required();
  grid->add_option("cols", cols)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) return cmd_parse(a);
    if (*check) return cmd_check(a, b);
    if (*reduce) return cmd_reduce(a, b, out);
    if (*verify) return cmd_verify(a);
    if (*sc_reduce) return cmd_sigmacol_reduce(a, out);
    if (*sc_solve) return cmd_sigmacol_solve(a, via_formula);
    if (*sc_formula) return cmd_sigmacol_formula(k);
    if (*color) return cmd_color(a);
    if (*grid) return cmd_grid(rows, cols);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
