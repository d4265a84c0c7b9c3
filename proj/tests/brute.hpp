#pragma once

// Deliberately naive reference implementations used as test oracles.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "widdershins/graph.hpp"
#include "widdershins/permutation.hpp"

namespace brute {

using widdershins::Graph;
using widdershins::Permutation;

inline std::vector<int> values_of(const Permutation& p) {
  std::vector<int> v;
  for (std::size_t i = 0; i < p.size(); ++i) v.push_back(p[i]);
  return v;
}

inline bool same_order(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
    }
  }
  return true;
}

/// Tries every index subset of size |sigma|.
inline bool contains(const Permutation& sigma, const Permutation& pi) {
  const std::size_t k = sigma.size(), n = pi.size();
  if (k > n) return false;
  const auto s = values_of(sigma), p = values_of(pi);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (pick[i]) sub.push_back(p[i]);
    }
    if (same_order(s, sub)) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

template <typename F>
void for_each_permutation(std::size_t n, F&& f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

/// Tries all n! vertex bijections.
inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  std::vector<std::size_t> map(g.order());
  std::iota(map.begin(), map.end(), 0);
  do {
    bool ok = true;
    for (std::size_t u = 0; u < g.order() && ok; ++u) {
      for (std::size_t v = u + 1; v < g.order() && ok; ++v) {
        ok = g.has_edge(u, v) == h.has_edge(map[u], map[v]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

/// Tries every vertex subset of the host.
inline bool induced_subgraph(const Graph& pattern, const Graph& host) {
  const std::size_t k = pattern.order(), n = host.order();
  if (k > n) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    if (isomorphic(pattern, host.induced(mask))) return true;
  }
  return false;
}

/// Graph on n vertices whose edges are the set bits of `code` over the pairs (u<v) in order.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph random_graph(std::size_t n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace brute
