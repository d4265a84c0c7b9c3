#pragma once

// Small simple graphs (at most 64 vertices) stored as adjacency bit rows,
// graph6 text, isomorphism, canonical forms and induced-subgraph search.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace widdershins {

using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxGraphVertices = 64;

class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices (0-based). Throws TooLarge past 64.
  explicit Graph(std::size_t n);
  static Graph from_edges(std::size_t n,
                          std::initializer_list<std::pair<std::size_t, std::size_t>> edges);
  static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const;
  bool has_edge(std::size_t u, std::size_t v) const { return (rows_[u] >> v) & 1U; }
  VertexMask neighbours(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const;
  VertexMask all_vertices() const;

  /// Adds {u, v}; loops are rejected.
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  /// Subgraph induced by the listed vertices, renumbered in list order.
  Graph induced(std::span<const std::size_t> vertices) const;
  Graph induced(VertexMask vertices) const;
  /// Vertex `i` of the result is vertex order[i] of this graph.
  Graph relabelled(std::span<const std::size_t> order) const;
  Graph without_vertex(std::size_t v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> rows_;
};

Graph complement(const Graph& g);

/// graph6 encoding (no ">>graph6<<" header).
std::string to_graph6(const Graph& g);
/// Throws ParseError on malformed input.
Graph parse_graph6(std::string_view text);

/// Exact isomorphism test by backtracking over degree-compatible bijections.
bool graph_iso(const Graph& g, const Graph& h);

/// graph6 string of the relabelling whose adjacency bits are
/// lexicographically smallest among all orderings compatible with
/// colour refinement. Two graphs are isomorphic iff their forms are equal.
std::string canonical_form(const Graph& g);

/// Vertex filter for embeddings: may pattern vertex `p` map to host vertex `h`?
using VertexCompatibility = std::function<bool(std::size_t p, std::size_t h)>;

/// An injective map of pattern vertices onto host vertices preserving both
/// adjacency and non-adjacency (so the image induces a copy of `pattern`).
std::optional<std::vector<std::size_t>> find_induced_embedding(
    const Graph& pattern, const Graph& host, const VertexCompatibility& compatible = {});

inline bool induced_subgraph_iso(const Graph& pattern, const Graph& host) {
  return find_induced_embedding(pattern, host).has_value();
}

/// Partition into a clique and an independent set, by direct search.
bool is_split(const Graph& g);

}  // namespace widdershins
