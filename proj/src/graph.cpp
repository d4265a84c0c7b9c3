#include "widdershins/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "widdershins/error.hpp"

namespace widdershins {

namespace {

VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

VertexMask low_bits(std::size_t n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }

}  // namespace

Graph::Graph(std::size_t n) {
  if (n > kMaxGraphVertices) {
    throw TooLarge("graphs are limited to " + std::to_string(kMaxGraphVertices) + " vertices");
  }
  rows_.assign(n, 0);
}

Graph Graph::from_edges(std::size_t n,
                        std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
  return from_edges(n, std::span<const std::pair<std::size_t, std::size_t>>(edges.begin(),
                                                                            edges.size()));
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) g.rows_[u] = low_bits(n) & ~bit(u);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto r : rows_) twice += static_cast<std::size_t>(std::popcount(r));
  return twice / 2;
}

std::size_t Graph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::popcount(rows_[v]));
}

VertexMask Graph::all_vertices() const { return low_bits(order()); }

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw Error("loop at vertex " + std::to_string(u));
  if (u >= order() || v >= order()) throw Error("edge endpoint out of range");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) g.add_edge(i, j);
    }
  }
  return g;
}

Graph Graph::induced(VertexMask vertices) const {
  std::vector<std::size_t> list;
  for (std::size_t v = 0; v < order(); ++v) {
    if (vertices & bit(v)) list.push_back(v);
  }
  return induced(list);
}

Graph Graph::relabelled(std::span<const std::size_t> order_) const { return induced(order_); }

Graph Graph::without_vertex(std::size_t v) const {
  if (v >= order()) throw CannotDelete("vertex " + std::to_string(v) + " out of range");
  return induced(all_vertices() & ~bit(v));
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, used = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = used = 0;
      }
    }
  }
  if (used) out.push_back(static_cast<char>(63 + (acc << (6 - used))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
  }
  std::size_t n = 0, pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("unsupported graph6 size prefix");
    n = (static_cast<std::size_t>(text[1] - 63) << 12) |
        (static_cast<std::size_t>(text[2] - 63) << 6) | static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  if (n > kMaxGraphVertices) throw ParseError("graph6 graph has more than 64 vertices");
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw ParseError("graph6 length does not match vertex count");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

// Next vertex to place: most already-placed neighbours, then highest degree.
std::vector<std::size_t> search_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order;
  VertexMask placed = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_links = -1;
    std::size_t best_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      const int links = std::popcount(g.neighbours(v) & placed);
      if (links > best_links || (links == best_links && g.degree(v) > best_degree)) {
        best = v;
        best_links = links;
        best_degree = g.degree(v);
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

struct EmbeddingSearch {
  const Graph& pattern;
  const Graph& host;
  const VertexCompatibility& compatible;
  bool require_bijection;
  std::vector<std::size_t> order;
  std::vector<std::size_t> image;
  VertexMask used = 0;

  bool run(std::size_t step) {
    if (step == order.size()) return true;
    const std::size_t v = order[step];
    const std::size_t pdeg = pattern.degree(v);
    const std::size_t pnon = pattern.order() - 1 - pdeg;
    VertexMask candidates = host.all_vertices() & ~used;
    for (std::size_t s = 0; s < step; ++s) {
      const std::size_t u = order[s];
      const VertexMask hn = host.neighbours(image[u]);
      candidates &= pattern.has_edge(u, v) ? hn : ~hn;
    }
    while (candidates) {
      const auto w = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      const std::size_t hdeg = host.degree(w);
      if (require_bijection ? hdeg != pdeg
                            : (hdeg < pdeg || host.order() - 1 - hdeg < pnon)) {
        continue;
      }
      if (compatible && !compatible(v, w)) continue;
      image[v] = w;
      used |= bit(w);
      if (run(step + 1)) return true;
      used &= ~bit(w);
    }
    return false;
  }
};

}  // namespace

bool graph_iso(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (sorted_degrees(g) != sorted_degrees(h)) return false;
  static const VertexCompatibility any{};
  EmbeddingSearch search{g, h, any, true, search_order(g), std::vector<std::size_t>(g.order()), 0};
  return search.run(0);
}

std::optional<std::vector<std::size_t>> find_induced_embedding(const Graph& pattern,
                                                               const Graph& host,
                                                               const VertexCompatibility& compatible) {
  if (pattern.order() > host.order()) return std::nullopt;
  EmbeddingSearch search{pattern, host, compatible, false, search_order(pattern),
                         std::vector<std::size_t>(pattern.order()), 0};
  if (!search.run(0)) return std::nullopt;
  return search.image;
}

namespace {

// Colour refinement: a vertex's new colour is the rank of
// (old colour, sorted neighbour colours). Cells only ever split, and the
// relative order of cells is preserved, so the result is isomorphism
// invariant.
std::vector<int> refine(const Graph& g, std::vector<int> colours) {
  const std::size_t n = g.order();
  std::size_t classes = 0;
  {
    auto tmp = colours;
    std::sort(tmp.begin(), tmp.end());
    classes = static_cast<std::size_t>(std::unique(tmp.begin(), tmp.end()) - tmp.begin());
  }
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      signature[v].push_back(colours[v]);
      std::vector<int> nb;
      for (VertexMask m = g.neighbours(v); m; m &= m - 1) {
        nb.push_back(colours[static_cast<std::size_t>(std::countr_zero(m))]);
      }
      std::sort(nb.begin(), nb.end());
      signature[v].insert(signature[v].end(), nb.begin(), nb.end());
    }
    auto keys = signature;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t v = 0; v < n; ++v) {
      colours[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), signature[v]) -
                                    keys.begin());
    }
    if (keys.size() == classes) return colours;
    classes = keys.size();
  }
}

void canonical_search(const Graph& g, const std::vector<int>& colours, std::string& best) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cell_size(n, 0);
  for (int c : colours) ++cell_size[static_cast<std::size_t>(c)];
  int target = -1;
  for (std::size_t c = 0; c < n; ++c) {
    if (cell_size[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  }
  if (target < 0) {
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[static_cast<std::size_t>(colours[v])] = v;
    std::string form = to_graph6(g.relabelled(order));
    if (best.empty() || form < best) best = std::move(form);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (colours[v] != target) continue;
    std::vector<int> split(n);
    for (std::size_t u = 0; u < n; ++u) {
      split[u] = 2 * colours[u] + ((colours[u] == target && u != v) ? 1 : 0);
    }
    canonical_search(g, refine(g, split), best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() == 0) return to_graph6(g);
  std::string best;
  canonical_search(g, refine(g, std::vector<int>(g.order(), 0)), best);
  return best;
}

namespace {

bool split_assign(const Graph& g, std::size_t v, VertexMask clique, VertexMask independent) {
  if (v == g.order()) return true;
  const VertexMask nb = g.neighbours(v);
  if ((clique & ~nb) == 0 && split_assign(g, v + 1, clique | bit(v), independent)) return true;
  return (independent & nb) == 0 && split_assign(g, v + 1, clique, independent | bit(v));
}

}  // namespace

bool is_split(const Graph& g) { return split_assign(g, 0, 0, 0); }

}  // namespace widdershins
