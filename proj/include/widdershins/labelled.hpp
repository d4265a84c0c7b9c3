#pragma once

// Graphs labelled by a finite quasi-order and the labelled induced subgraph
// order: (H, k) embeds in (G, l) when H is an induced subgraph of G under a
// map sending each v to some w with k(v) <= l(w).

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "widdershins/graph.hpp"

namespace widdershins {

/// A finite quasi-order over single-character symbols.
class LabelPoset {
 public:
  /// `relations` lists pairs (a, b) meaning a <= b; reflexivity is implied
  /// and the transitive closure is taken.
  LabelPoset(std::string symbols, std::span<const std::pair<char, char>> relations = {});

  /// Black and white, incomparable.
  static LabelPoset black_white();
  /// A single label, for unlabelled comparisons.
  static LabelPoset trivial();

  const std::string& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  /// Index of `symbol`; throws ParseError when absent.
  std::size_t index_of(char symbol) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b]; }

  friend bool operator==(const LabelPoset&, const LabelPoset&) = default;

 private:
  std::string symbols_;
  std::vector<bool> leq_;
};

inline constexpr char kBlack = 'b';
inline constexpr char kWhite = 'w';

class LabelledGraph {
 public:
  /// Labels are poset indices, one per vertex.
  LabelledGraph(Graph graph, std::vector<std::size_t> labels, LabelPoset poset);
  /// Labels given as one symbol per vertex, e.g. "wbbw".
  LabelledGraph(Graph graph, std::string_view label_symbols, LabelPoset poset);

  const Graph& graph() const { return graph_; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  const LabelPoset& poset() const { return poset_; }
  std::size_t order() const { return graph_.order(); }
  std::string label_string() const;

  friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

 private:
  Graph graph_;
  std::vector<std::size_t> labels_;
  LabelPoset poset_;
};

/// Two lines: graph6, then the label symbols.
std::string to_text(const LabelledGraph& lg);
LabelledGraph parse_labelled_graph(std::string_view text, const LabelPoset& poset);

/// Throws PosetMismatch when the label posets differ.
bool labelled_embeds(const LabelledGraph& pattern, const LabelledGraph& host);

/// u1..uk independent (vertices 0..k-1), v1..vk a clique (vertices k..2k-1),
/// u_i ~ v_j iff i = j or i <= j-2; u1 and vk white, the rest black.
/// Throws TooSmall for k < 4.
LabelledGraph wk_graph(std::size_t k);

/// Path on m vertices with white ends and black interior. Throws TooSmall for m < 3.
LabelledGraph labelled_path(std::size_t m);

/// True iff no member embeds in a different member (duplicates fail).
/// Throws PosetMismatch when posets differ.
bool antichain_check(std::span<const LabelledGraph> graphs, std::size_t workers = 1);

using VertexSelector = std::function<std::size_t(const Graph&)>;

/// Deletes the selected vertex (default: vertex 0) of each graph and colours
/// the remaining vertices white when they were adjacent to it, black
/// otherwise. Throws CannotDelete for an empty graph.
std::vector<LabelledGraph> prop1_construction(std::span<const Graph> graphs,
                                              const VertexSelector& pick = {});

}  // namespace widdershins
