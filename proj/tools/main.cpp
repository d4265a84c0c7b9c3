// widdershins: command-line front end for the permutation-class and
// labelled-graph machinery. Results go to stdout, progress to stderr.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "widdershins/class_cache.hpp"
#include "widdershins/commands.hpp"
#include "widdershins/error.hpp"
#include "widdershins/labelled.hpp"
#include "widdershins/membership.hpp"
#include "widdershins/permgraph.hpp"
#include "widdershins/ring_word.hpp"
#include "widdershins/spiral.hpp"

using namespace widdershins;

namespace {

struct Globals {
  bool json = false;
  std::size_t workers = 0;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  bool quiet = false;
};

void emit(const Globals& g, const CommandOutput& out) {
  if (g.json) std::cout << out.json.dump(2) << '\n';
  else if (!out.text.empty()) std::cout << out.text << '\n';
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + path + "' for writing");
  file << content;
  if (!file.flush()) throw Error("failed writing output file '" + path + "'");
}

std::string dot_of(const std::string& name, const Graph& g) {
  std::string out = "graph \"" + name + "\" {\n";
  for (std::size_t v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    }
  }
  return out + "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern classes of widdershins spirals and labelled graph antichains"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--workers", g.workers, "Worker threads (0 = available parallelism)");
  app.add_option("--cache-dir", g.cache_dir, "Level cache directory (default: $" +
                                                  std::string(kCacheDirEnv) + " or .cache)");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the level cache");
  app.add_flag("--quiet", g.quiet, "Suppress progress on stderr");

  std::unique_ptr<DirectoryLevelCache> cache;
  RunContext ctx;
  const auto setup = [&] {
    ctx.workers = g.workers;
    if (!g.no_cache) {
      cache = std::make_unique<DirectoryLevelCache>(resolve_cache_dir(g.cache_dir));
      ctx.cache = cache.get();
    }
    if (!g.quiet) ctx.progress = [](const std::string& line) { std::cerr << line << std::endl; };
  };
  int exit_code = 0;

  // spiral
  auto* spiral_cmd = app.add_subcommand("spiral", "Print a widdershins spiral");
  std::string orientation = "standard";
  std::size_t spiral_length = 4;
  spiral_cmd->add_option("--orientation,-o", orientation, "standard, rot90, rot180 or rot270");
  spiral_cmd->add_option("--length,-m", spiral_length, "Number of points (>= 4)");
  spiral_cmd->callback([&] {
    const auto pi = spiral({parse_orientation(orientation), spiral_length});
    CommandOutput out;
    out.text = to_string(pi);
    out.json["orientation"] = to_string(parse_orientation(orientation));
    out.json["length"] = spiral_length;
    out.json["permutation"] = out.text;
    emit(g, out);
  });

  // member / decompose: shortcuts for the corresponding queries
  std::string perm_arg, class_name = "W";
  auto* member_cmd = app.add_subcommand("member", "Test membership in a class");
  member_cmd->add_option("permutation", perm_arg)->required();
  member_cmd->add_option("--class", class_name, "Class name (W, Winv, WuWinv, av:..., ...)");
  member_cmd->callback([&] { emit(g, run_query("member", {perm_arg, class_name})); });

  auto* decompose_cmd = app.add_subcommand("decompose", "Ring-decompose a member of W");
  decompose_cmd->add_option("permutation", perm_arg)->required();
  decompose_cmd->callback([&] {
    const auto out = run_query("decompose", {perm_arg});
    emit(g, out);
    if (!out.json["in_W"].get<bool>()) exit_code = 1;
  });

  // counts
  std::size_t max_n = 10;
  auto* counts_cmd = app.add_subcommand("counts", "Coefficients of the generating function of W");
  counts_cmd->add_option("--max-n", max_n, "Last coefficient index");
  counts_cmd->callback([&] {
    CommandOutput out;
    Json list = Json::array();
    for (const auto& c : gf_coefficients(max_n)) {
      list.push_back(c.str());
      out.text += (out.text.empty() ? "" : " ") + c.str();
    }
    out.json["max_n"] = max_n;
    out.json["coefficients"] = list;
    emit(g, out);
  });

  // verify
  std::string claim;
  VerifyBounds bounds;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute a claim and report PASS/FAIL");
  verify_cmd->add_option("claim", claim, "Claim id or 'all'")->required();
  verify_cmd->add_option("--max-len", bounds.max_len, "Longest basis element searched (prop3.3, cor3.5)");
  verify_cmd->add_option("--max-n", bounds.max_n, "Largest length or size (cor3.2, fig1, prop1.1, oracles, encoding)");
  verify_cmd->add_option("--max-k", bounds.max_k, "Largest W_k (prop4.4)");
  verify_cmd->add_option("--graph-n", bounds.graph_n, "Vertex bound for the reverse inclusion (prop4.3)");
  verify_cmd->add_option("--perm-n", bounds.perm_n, "Length bound for the forward inclusion (prop4.3)");
  verify_cmd->add_option("--samples", bounds.samples, "Random pairs (encoding)");
  verify_cmd->add_flag("--extended", bounds.extended, "Allow the multi-hour cor3.5 bounds");
  verify_cmd->add_flag("--timing", timing, "Include wall time in the report");
  verify_cmd->callback([&] {
    setup();
    std::vector<std::string> claims;
    if (claim == "all") claims = known_claims();
    else claims = {claim};
    Json reports = Json::array();
    for (const auto& c : claims) {
      // Under "all" every claim runs with its own defaults.
      const auto report = run_verify(c, claim == "all" ? VerifyBounds{} : bounds, ctx);
      if (!report.passed) exit_code = 1;
      if (g.json) reports.push_back(to_json(report, timing));
      else std::cout << to_text(report, timing) << std::flush;
    }
    if (g.json) std::cout << (claims.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  });

  // enumerate
  EnumerateRequest request;
  std::string output_path;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List or count a class level by level");
  enumerate_cmd->add_option("--class", request.class_name);
  enumerate_cmd->add_option("--max-n", request.max_n, "Longest length enumerated");
  enumerate_cmd->add_flag("--counts", request.counts_only, "Only print the counts");
  enumerate_cmd->add_option("--output", output_path, "Write to a file instead of stdout");
  enumerate_cmd->callback([&] {
    setup();
    const auto out = run_enumerate(request, ctx);
    if (output_path.empty()) {
      emit(g, out);
    } else {
      write_output(output_path, (g.json ? out.json.dump(2) : out.text) + "\n");
    }
  });

  // basis
  std::size_t max_len = 7;
  auto* basis_cmd = app.add_subcommand("basis", "Minimal non-members of a class");
  basis_cmd->add_option("--class", class_name);
  basis_cmd->add_option("--max-len", max_len, "Longest basis element searched");
  basis_cmd->add_option("--output", output_path);
  basis_cmd->callback([&] {
    setup();
    const auto basis = compute_basis(named_oracle(class_name), max_len, ctx.search());
    CommandOutput out;
    Json list = Json::array();
    for (const auto& p : basis.patterns()) list.push_back(to_string(p));
    out.json["class"] = class_name;
    out.json["max_len"] = max_len;
    out.json["basis"] = list;
    out.text = format_basis(basis);
    if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
    if (output_path.empty()) emit(g, out);
    else write_output(output_path, (g.json ? out.json.dump(2) : out.text) + "\n");
  });

  // union-basis
  std::string left, right;
  std::optional<std::size_t> union_len;
  auto* union_cmd = app.add_subcommand("union-basis", "Basis of Av(left) ∪ Av(right)");
  union_cmd->add_option("--left", left, "Comma-separated patterns")->required();
  union_cmd->add_option("--right", right, "Comma-separated patterns")->required();
  union_cmd->add_option("--max-len", union_len, "Search bound (default: sum of longest patterns)");
  union_cmd->callback([&] {
    setup();
    const auto basis = union_basis(parse_basis(left), parse_basis(right), union_len, ctx.search());
    CommandOutput out;
    Json list = Json::array();
    for (const auto& p : basis.patterns()) list.push_back(to_string(p));
    out.json["basis"] = list;
    out.text = format_basis(basis);
    if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
    emit(g, out);
  });

  // query
  std::string kind;
  std::vector<std::string> query_args;
  auto* query_cmd = app.add_subcommand(
      "query", "contains <s> <p> | graph-of <p> | decompose <p> | member <p> [class] | realizers <g>");
  query_cmd->add_option("kind", kind)->required();
  query_cmd->add_option("args", query_args);
  query_cmd->callback([&] { emit(g, run_query(kind, query_args)); });

  // lwqo antichain
  auto* lwqo_cmd = app.add_subcommand("lwqo", "Labelled graph antichains");
  lwqo_cmd->require_subcommand(1);
  std::string family = "wk";
  std::size_t from = 4, to = 9;
  auto* antichain_cmd = lwqo_cmd->add_subcommand("antichain", "Check a finite family prefix");
  antichain_cmd->add_option("--family", family, "wk, path or cycles")
      ->check(CLI::IsMember({"wk", "path", "cycles"}));
  antichain_cmd->add_option("--from", from);
  antichain_cmd->add_option("--to", to);
  antichain_cmd->callback([&] {
    std::vector<LabelledGraph> graphs;
    if (family == "cycles") {
      std::vector<Graph> cycles;
      for (std::size_t n = from; n <= to; ++n) cycles.push_back(Graph::cycle(n));
      graphs = prop1_construction(cycles);
    } else {
      for (std::size_t k = from; k <= to; ++k) {
        graphs.push_back(family == "wk" ? wk_graph(k) : labelled_path(k));
      }
    }
    const bool ok = antichain_check(graphs, g.workers);
    if (!ok) exit_code = 1;
    CommandOutput out;
    out.json["family"] = family;
    out.json["from"] = from;
    out.json["to"] = to;
    out.json["antichain"] = ok;
    out.text = ok ? "antichain" : "not an antichain";
    emit(g, out);
  });

  // catalog
  bool dot = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "Forbidden induced subgraphs of the graphs of W ∪ W⁻¹");
  catalog_cmd->add_flag("--dot", dot, "Emit Graphviz DOT");
  catalog_cmd->callback([&] {
    CommandOutput out;
    Json list = Json::array();
    for (const auto& entry : catalog()) {
      list.push_back({{"name", entry.name}, {"graph6", to_graph6(entry.graph)}});
      if (dot) out.text += dot_of(entry.name, entry.graph);
      else out.text += (out.text.empty() ? "" : "\n") + entry.name + " " + to_graph6(entry.graph);
    }
    if (dot && !out.text.empty()) out.text.pop_back();
    out.json["graphs"] = list;
    emit(g, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const DomainExceeded& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
