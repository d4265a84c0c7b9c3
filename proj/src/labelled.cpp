#include "widdershins/labelled.hpp"

#include <atomic>

#include "widdershins/error.hpp"
#include "widdershins/parallel.hpp"

namespace widdershins {

LabelPoset::LabelPoset(std::string symbols, std::span<const std::pair<char, char>> relations)
    : symbols_(std::move(symbols)), leq_(symbols_.size() * symbols_.size(), false) {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && symbols_[i] == symbols_[j]) throw ParseError("duplicate label symbol");
    }
    leq_[i * n + i] = true;
  }
  for (auto [a, b] : relations) leq_[index_of(a) * n + index_of(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq_[i * n + k] && leq_[k * n + j]) leq_[i * n + j] = true;
      }
    }
  }
}

LabelPoset LabelPoset::black_white() { return LabelPoset(std::string{kBlack, kWhite}); }

LabelPoset LabelPoset::trivial() { return LabelPoset("x"); }

std::size_t LabelPoset::index_of(char symbol) const {
  const auto pos = symbols_.find(symbol);
  if (pos == std::string::npos) {
    throw ParseError(std::string("label '") + symbol + "' not in poset");
  }
  return pos;
}

LabelledGraph::LabelledGraph(Graph graph, std::vector<std::size_t> labels, LabelPoset poset)
    : graph_(std::move(graph)), labels_(std::move(labels)), poset_(std::move(poset)) {
  if (labels_.size() != graph_.order()) throw Error("one label per vertex required");
  for (auto l : labels_) {
    if (l >= poset_.size()) throw Error("label index outside the poset");
  }
}

namespace {

std::vector<std::size_t> label_indices(std::string_view symbols, const LabelPoset& poset) {
  std::vector<std::size_t> out;
  out.reserve(symbols.size());
  for (char c : symbols) out.push_back(poset.index_of(c));
  return out;
}

}  // namespace

LabelledGraph::LabelledGraph(Graph graph, std::string_view label_symbols, LabelPoset poset)
    : LabelledGraph(std::move(graph), label_indices(label_symbols, poset), LabelPoset(poset)) {}

std::string LabelledGraph::label_string() const {
  std::string out;
  for (auto l : labels_) out.push_back(poset_.symbols()[l]);
  return out;
}

std::string to_text(const LabelledGraph& lg) {
  return to_graph6(lg.graph()) + "\n" + lg.label_string() + "\n";
}

LabelledGraph parse_labelled_graph(std::string_view text, const LabelPoset& poset) {
  const auto newline = text.find('\n');
  if (newline == std::string_view::npos) throw ParseError("expected graph6 line and label line");
  auto labels = text.substr(newline + 1);
  while (!labels.empty() && (labels.back() == '\n' || labels.back() == '\r')) labels.remove_suffix(1);
  Graph g = parse_graph6(text.substr(0, newline));
  if (labels.size() != g.order()) throw ParseError("label line length differs from vertex count");
  return LabelledGraph(std::move(g), labels, poset);
}

bool labelled_embeds(const LabelledGraph& pattern, const LabelledGraph& host) {
  if (pattern.poset() != host.poset()) throw PosetMismatch("graphs are labelled by different posets");
  const auto& poset = pattern.poset();
  const auto& pl = pattern.labels();
  const auto& hl = host.labels();
  return find_induced_embedding(pattern.graph(), host.graph(),
                                [&](std::size_t p, std::size_t h) {
                                  return poset.leq(pl[p], hl[h]);
                                })
      .has_value();
}

LabelledGraph wk_graph(std::size_t k) {
  if (k < 4) throw TooSmall("W_k needs k >= 4, got " + std::to_string(k));
  Graph g(2 * k);
  const auto u = [](std::size_t i) { return i - 1; };
  const auto v = [k](std::size_t j) { return k + j - 1; };
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = i + 1; j <= k; ++j) g.add_edge(v(i), v(j));
  }
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      if (i == j || i + 2 <= j) g.add_edge(u(i), v(j));
    }
  }
  std::string labels(2 * k, kBlack);
  labels[u(1)] = kWhite;
  labels[v(k)] = kWhite;
  return LabelledGraph(std::move(g), labels, LabelPoset::black_white());
}

LabelledGraph labelled_path(std::size_t m) {
  if (m < 3) throw TooSmall("labelled paths need at least 3 vertices");
  std::string labels(m, kBlack);
  labels.front() = kWhite;
  labels.back() = kWhite;
  return LabelledGraph(Graph::path(m), labels, LabelPoset::black_white());
}

bool antichain_check(std::span<const LabelledGraph> graphs, std::size_t workers) {
  if (graphs.empty()) return true;
  for (const auto& g : graphs) {
    if (g.poset() != graphs.front().poset()) throw PosetMismatch("antichain members use different posets");
  }
  const std::size_t n = graphs.size();
  std::atomic<bool> comparable{false};
  parallel_chunks(n * n, workers, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t idx = begin; idx < end && !comparable.load(); ++idx) {
      const std::size_t a = idx / n, b = idx % n;
      if (a != b && labelled_embeds(graphs[a], graphs[b])) comparable.store(true);
    }
  });
  return !comparable.load();
}

std::vector<LabelledGraph> prop1_construction(std::span<const Graph> graphs,
                                              const VertexSelector& pick) {
  std::vector<LabelledGraph> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) {
    if (g.order() == 0) throw CannotDelete("cannot delete a vertex of the empty graph");
    const std::size_t chosen = pick ? pick(g) : 0;
    if (chosen >= g.order()) throw CannotDelete("selected vertex out of range");
    std::string labels;
    for (std::size_t w = 0; w < g.order(); ++w) {
      if (w != chosen) labels.push_back(g.has_edge(chosen, w) ? kWhite : kBlack);
    }
    out.emplace_back(g.without_vertex(chosen), labels, LabelPoset::black_white());
  }
  return out;
}

}  // namespace widdershins
