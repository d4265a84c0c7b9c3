#pragma once

// Permutation graphs, the catalogue of forbidden graphs for the spiral
// class, and bounded-size checks of its forbidden-subgraph characterisation.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "widdershins/graph.hpp"
#include "widdershins/pattern_class.hpp"
#include "widdershins/permutation.hpp"

namespace widdershins {

/// Vertices 0..n-1 for positions 1..n; i ~ j iff i < j and pi(i) > pi(j).
Graph perm_graph(const Permutation& pi);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The 14 minimal forbidden induced subgraphs of the permutation graphs of
/// the spiral class, in the order 2K2, C4, C5, net, co-net, rising-sun,
/// co-rising-sun, H, co-H, cross, co-cross, X168, co-X168, X160.
const std::vector<NamedGraph>& catalog();
/// Throws std::out_of_range for an unknown name.
const Graph& catalog_graph(const std::string& name);

/// One row of the permutation-to-graph chart: the forbidden permutations of
/// W ∪ W⁻¹ whose permutation graph is the named catalogue graph.
struct ChartRow {
  std::string graph_name;
  std::vector<Permutation> permutations;
};
const std::vector<ChartRow>& forbidden_permutation_chart();

/// Every permutation of length n whose graph is isomorphic to g, sorted.
/// Scans all n! permutations; throws TooLarge for n > 9.
std::vector<Permutation> realizing_permutations(const Graph& g, std::size_t n);

/// Canonical forms of the isomorphism classes of graphs on exactly n
/// vertices with no induced copy of any forbidden graph, for n = 0..max_n.
/// Classes on n vertices are grown from those on n-1 vertices by adding a
/// vertex with every possible neighbourhood (valid because the family is
/// hereditary).
std::vector<std::set<std::string>> enumerate_graphs_avoiding(const std::vector<Graph>& forbidden,
                                                            std::size_t max_n);

/// True iff no catalogue graph is an induced subgraph of g; otherwise the
/// name of the first one found is stored in `witness`.
bool avoids_catalog(const Graph& g, std::string* witness = nullptr,
                    const std::vector<NamedGraph>& forbidden = catalog());

struct Prop43Options {
  std::size_t max_graph_n = 7;
  std::size_t max_perm_n = 8;
  SearchOptions search;
};

struct Prop43Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<std::string> counterexample;
};

struct Prop43Report {
  std::vector<Prop43Check> checks;
  bool passed() const;
};

/// Checks, at bounded size: the catalogue is pairwise non-isomorphic and an
/// induced-subgraph antichain; each chart row is exactly the realizer set of
/// its graph; every graph of W ∪ W⁻¹ up to max_perm_n avoids the catalogue;
/// and every catalogue-avoiding graph up to max_graph_n vertices is the
/// graph of some member of W ∪ W⁻¹.
Prop43Report verify_prop_4_3(const Prop43Options& options = {});

}  // namespace widdershins
