#include "widdershins/permgraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "widdershins/error.hpp"
#include "widdershins/membership.hpp"

namespace widdershins {

Graph perm_graph(const Permutation& pi) {
  Graph g(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    for (std::size_t j = i + 1; j < pi.size(); ++j) {
      if (pi[i] > pi[j]) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

std::vector<NamedGraph> build_catalog() {
  const auto from_perm = [](std::string_view p) { return perm_graph(parse_permutation(p)); };

  // Triangle a,b,c = 0,1,2 with pendants a'=3, b'=4, c'=5.
  const Graph net = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  // K4 on s1..s4 = 0..3 plus o1=4 ~ {s1,s4}, o2=5 ~ {s3,s4}, o3=6 ~ {s2,s3}.
  const Graph rising_sun = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {4, 0}, {4, 3}, {5, 2}, {5, 3}, {6, 1},
          {6, 2}});
  const Graph h = from_perm("236145");
  const Graph cross = from_perm("234615");
  const Graph x168 = from_perm("236514");

  return {
      {"2K2", from_perm("2143")},
      {"C4", from_perm("3412")},
      {"C5", Graph::cycle(5)},
      {"net", net},
      {"co-net", complement(net)},
      {"rising-sun", rising_sun},
      {"co-rising-sun", complement(rising_sun)},
      {"H", h},
      {"co-H", complement(h)},
      {"cross", cross},
      {"co-cross", complement(cross)},
      {"X168", x168},
      {"co-X168", complement(x168)},
      {"X160", from_perm("28536417")},
  };
}

}  // namespace

const std::vector<NamedGraph>& catalog() {
  static const std::vector<NamedGraph> graphs = build_catalog();
  return graphs;
}

const Graph& catalog_graph(const std::string& name) {
  for (const auto& entry : catalog()) {
    if (entry.name == name) return entry.graph;
  }
  throw std::out_of_range("no catalogue graph named '" + name + "'");
}

const std::vector<ChartRow>& forbidden_permutation_chart() {
  static const std::vector<ChartRow> chart = [] {
    const auto row = [](std::string name, std::string_view perms) {
      return ChartRow{std::move(name), parse_basis(perms).patterns()};
    };
    return std::vector<ChartRow>{
        row("2K2", "2143"),
        row("C4", "3412"),
        row("H", "236145, 412563"),
        row("co-H", "365214, 541632"),
        row("cross", "234615, 261345, 314562, 512364"),
        row("co-cross", "265413, 463215, 516432, 543162"),
        row("X168", "236514, 362145, 431562, 512643"),
        row("co-X168", "265134, 346215, 415632, 541263"),
        row("X160", "28536417, 71463582"),
    };
  }();
  return chart;
}

std::vector<Permutation> realizing_permutations(const Graph& g, std::size_t n) {
  if (n > 9) throw TooLarge("realizing_permutations scans n! permutations; n <= 9 required");
  if (g.order() != n) return {};
  const std::size_t edges = g.edge_count();
  std::vector<std::size_t> degrees(n);
  for (std::size_t v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  const std::string target = canonical_form(g);

  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  std::vector<Permutation> out;
  std::vector<std::size_t> d(n);
  do {
    const Permutation pi(values);
    const Graph candidate = perm_graph(pi);
    if (candidate.edge_count() != edges) continue;
    for (std::size_t v = 0; v < n; ++v) d[v] = candidate.degree(v);
    std::sort(d.begin(), d.end());
    if (d != degrees) continue;
    if (canonical_form(candidate) == target) out.push_back(pi);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::vector<std::set<std::string>> enumerate_graphs_avoiding(const std::vector<Graph>& forbidden,
                                                            std::size_t max_n) {
  if (max_n > 10) throw TooLarge("graph enumeration is limited to 10 vertices");
  const auto admissible = [&](const Graph& g) {
    return std::none_of(forbidden.begin(), forbidden.end(), [&](const Graph& f) {
      return f.order() <= g.order() && induced_subgraph_iso(f, g);
    });
  };

  std::vector<std::set<std::string>> levels;
  levels.reserve(max_n + 1);
  const Graph empty(0);
  levels.emplace_back();
  if (admissible(empty)) levels[0].insert(canonical_form(empty));

  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<std::string> level;
    std::unordered_set<std::string> seen;
    for (const auto& code : levels[n - 1]) {
      const Graph base = parse_graph6(code);
      for (VertexMask nb = 0; nb < (VertexMask{1} << (n - 1)); ++nb) {
        Graph g(n);
        for (std::size_t u = 0; u + 1 < n; ++u) {
          for (std::size_t v = u + 1; v + 1 < n; ++v) {
            if (base.has_edge(u, v)) g.add_edge(u, v);
          }
          if ((nb >> u) & 1U) g.add_edge(u, n - 1);
        }
        std::string form = canonical_form(g);
        if (!seen.insert(form).second) continue;
        if (admissible(g)) level.insert(std::move(form));
      }
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

bool avoids_catalog(const Graph& g, std::string* witness, const std::vector<NamedGraph>& forbidden) {
  for (const auto& entry : forbidden) {
    if (entry.graph.order() <= g.order() && induced_subgraph_iso(entry.graph, g)) {
      if (witness) *witness = entry.name;
      return false;
    }
  }
  return true;
}

bool Prop43Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Prop43Check& c) { return c.passed; });
}

Prop43Report verify_prop_4_3(const Prop43Options& options) {
  Prop43Report report;
  const auto& graphs = catalog();

  {
    Prop43Check check{"catalog-antichain", true, "", std::nullopt};
    for (std::size_t i = 0; i < graphs.size() && check.passed; ++i) {
      for (std::size_t j = 0; j < graphs.size(); ++j) {
        if (i == j) continue;
        if (induced_subgraph_iso(graphs[i].graph, graphs[j].graph)) {
          check.passed = false;
          check.counterexample = graphs[i].name + " <= " + graphs[j].name;
          break;
        }
      }
    }
    check.detail = std::to_string(graphs.size()) + " graphs checked pairwise";
    report.checks.push_back(std::move(check));
  }

  {
    Prop43Check check{"chart", true, "", std::nullopt};
    std::vector<Permutation> left_column;
    for (const auto& row : forbidden_permutation_chart()) {
      const Graph& g = catalog_graph(row.graph_name);
      const auto found = realizing_permutations(g, g.order());
      left_column.insert(left_column.end(), row.permutations.begin(), row.permutations.end());
      if (found != row.permutations && check.passed) {
        check.passed = false;
        std::string got;
        for (const auto& p : found) got += (got.empty() ? "" : ",") + to_compact_string(p);
        check.counterexample = row.graph_name + " realized by {" + got + "}";
      }
    }
    if (check.passed && PatternBasis(left_column) != w_union_inverse_basis()) {
      check.passed = false;
      check.counterexample = "chart permutations differ from the basis of W ∪ W⁻¹";
    }
    check.detail = std::to_string(forbidden_permutation_chart().size()) + " rows";
    report.checks.push_back(std::move(check));
  }

  const std::size_t perm_bound = std::max(options.max_perm_n, options.max_graph_n);
  const auto members = enumerate_class(named_oracle("WuWinv"), perm_bound, options.search);

  {
    Prop43Check check{"forward", true, "", std::nullopt};
    std::size_t tested = 0, violations = 0;
    std::set<std::string> witnesses;
    for (std::size_t n = 0; n <= options.max_perm_n; ++n) {
      for (const auto& pi : members.members[n]) {
        std::string witness;
        ++tested;
        if (!avoids_catalog(perm_graph(pi), &witness)) {
          ++violations;
          witnesses.insert(witness);
          if (check.passed) check.counterexample = to_string(pi) + " contains " + witness;
          check.passed = false;
        }
      }
    }
    check.detail = std::to_string(tested) + " permutation graphs of W ∪ W⁻¹ up to length " +
                   std::to_string(options.max_perm_n) + ", " + std::to_string(violations) +
                   " violations";
    for (const auto& w : witnesses) check.detail += " [" + w + "]";
    report.checks.push_back(std::move(check));
  }

  {
    Prop43Check check{"reverse", true, "", std::nullopt};
    std::vector<Graph> forbidden;
    for (const auto& entry : graphs) forbidden.push_back(entry.graph);
    const auto classes = enumerate_graphs_avoiding(forbidden, options.max_graph_n);
    std::size_t total = 0;
    for (std::size_t n = 0; n <= options.max_graph_n && check.passed; ++n) {
      std::unordered_set<std::string> realized;
      for (const auto& pi : members.members[n]) realized.insert(canonical_form(perm_graph(pi)));
      for (const auto& code : classes[n]) {
        ++total;
        if (!realized.contains(code)) {
          check.passed = false;
          check.counterexample = code;
          break;
        }
      }
    }
    check.detail = std::to_string(total) + " catalogue-avoiding classes up to " +
                   std::to_string(options.max_graph_n) + " vertices";
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace widdershins
