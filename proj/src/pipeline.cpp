#include "msowb/pipeline.hpp"

#include <map>
#include <mutex>
#include <random>

#include "msowb/error.hpp"
#include "msowb/iso.hpp"

namespace msowb {

Advice build_advice(const Graph& h) {
  Advice a;
  a.rows = std::max<std::size_t>(2, h.order());
  a.cols = std::max<std::size_t>(2, h.size());
  a.grid = make_grid(a.rows, a.cols);
  a.colouring = strong_edge_colour(a.grid.graph);
  return a;
}

namespace {

template <class F>
auto stage(const char* name, F&& body) {
  try {
    return body();
  } catch (const CapacityError& e) {
    throw CapacityError(std::string(name) + ": " + e.what());
  }
}

StageStats stats_of(const std::string& name, const Graph& g, const Formula& f) {
  return {name, g.order(), g.size(), formula_size(f)};
}

}  // namespace

ReducedInstance reduce_instance(const Graph& f, const Formula& phi) {
  if (!is_sentence(phi)) throw InvalidArgument("phi must be a sentence");
  if (!labels_used(phi).empty()) throw InvalidArgument("phi must not use labels");
  auto p = std::make_shared<Provenance>();
  p->f = f;
  p->phi = phi;
  p->stats.push_back(stats_of("source", f, phi));

  p->enc1 = stage("regular13", [&] { return encode_13regular(f); });
  p->phi1 = translate(phi, p->enc1.i1);
  p->stats.push_back(stats_of("regular13", p->enc1.h, p->phi1));

  p->advice = stage("advice", [&] { return build_advice(p->enc1.h); });
  p->h1 = stage("subdivision",
                [&] { return embed_subdivision(p->enc1.h, p->advice.rows, p->advice.cols); });
  p->stats.push_back(stats_of("subdivision", p->h1.graph, p->phi1));

  p->enc2 = stage("labeling", [&] { return build_labeling(p->advice.grid, p->h1, p->advice.colouring); });
  p->i2 = build_I2(p->enc2.colour_count);
  ReducedInstance ri;
  ri.host = p->enc2.host;
  ri.psi = translate(p->phi1, p->i2);
  p->stats.push_back(stats_of("grid", ri.host.graph(), ri.psi));
  ri.provenance = std::move(p);
  return ri;
}

std::vector<LabeledGraph> encoding_hook_battery(int colour_count) {
  std::vector<LabeledGraph> out;
  const std::pair<std::size_t, std::size_t> grids[] = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}};
  for (auto [r, c] : grids) {
    GridLikeGraph glg = make_grid(r, c);
    EdgeColouring col = strong_edge_colour(glg.graph);
    if (col.colour_count() > colour_count) continue;
    // one labeling per white/black path pair, plus the whole biclique
    for (std::size_t w = 0; w < r; ++w)
      for (std::size_t b = r; b < r + c; ++b) {
        PathSubgraph h{{w, b}, complete_graph(2)};
        EncodingLabeling enc = build_labeling(glg, h, col);
        LabeledGraph host(enc.host.graph(), encoding_alphabet(colour_count));
        for (Vertex v = 0; v < host.graph().order(); ++v)
          for (const auto& l : enc.host.labels_of(v)) host.add_label(v, l);
        out.push_back(std::move(host));
      }
    PathSubgraph all;
    for (std::size_t p = 0; p < r + c; ++p) all.paths.push_back(p);
    all.graph = complete_bipartite(r, c);
    EncodingLabeling enc = build_labeling(glg, all, col);
    LabeledGraph host(enc.host.graph(), encoding_alphabet(colour_count));
    for (Vertex v = 0; v < host.graph().order(); ++v)
      for (const auto& l : enc.host.labels_of(v)) host.add_label(v, l);
    out.push_back(std::move(host));
  }
  std::mt19937 rng(20261016);
  const auto alphabet = encoding_alphabet(colour_count);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 6 + rng() % 5;
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    LabeledGraph lg(std::move(g), alphabet);
    for (Vertex v = 0; v < n; ++v)
      for (const auto& l : alphabet)
        if (rng() % 3 == 0) lg.add_label(v, l);
    out.push_back(std::move(lg));
  }
  return out;
}

std::vector<LabeledGraph> regular13_hook_battery() {
  std::vector<LabeledGraph> out;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : graphs_up_to_isomorphism(n)) out.emplace_back(g);
  std::mt19937 rng(20261017);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 7 + rng() % 4;
    Graph g(n);
    // sparse, so that degree-2 chains and leaves occur
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 4 == 0) g.add_edge(u, v);
    out.emplace_back(std::move(g));
  }
  return out;
}

bool hooks_certified(int colour_count) {
  static std::mutex mutex;
  static std::map<int, bool> cache;
  static int regular13 = -1;
  std::lock_guard<std::mutex> lock(mutex);
  if (regular13 < 0)
    regular13 = hook_conformance(regular13_hooks(), i1_hooked_predicates(), regular13_hook_battery()).empty();
  auto it = cache.find(colour_count);
  if (it == cache.end()) {
    bool ok = hook_conformance(encoding_hooks(), i2_hooked_predicates(colour_count),
                               encoding_hook_battery(colour_count))
                  .empty();
    it = cache.emplace(colour_count, ok).first;
  }
  return regular13 == 1 && it->second;
}

bool check_reduced(const ReducedInstance& ri) {
  if (!ri.provenance) throw Error("reduced instance carries no provenance");
  const Provenance& p = *ri.provenance;
  if (!(translate(p.phi1, p.i2) == ri.psi)) throw Error("psi does not match its provenance");
  if (!hooks_certified(p.enc2.colour_count))
    throw Error("acceleration hooks disagree with full expansion; refusing to evaluate");
  InducedStructure h1 = induce(ri.host, p.i2, &encoding_hooks());
  return evaluate(h1.graph, p.phi1, {}, &regular13_hooks());
}

}  // namespace msowb
