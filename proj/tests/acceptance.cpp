// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// --extended runs the union basis all the way to length 12 (hours).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "widdershins/commands.hpp"
#include "widdershins/graph.hpp"
#include "widdershins/labelled.hpp"
#include "widdershins/membership.hpp"
#include "widdershins/permgraph.hpp"
#include "widdershins/ring_word.hpp"
#include "widdershins/spiral.hpp"

using namespace widdershins;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("error: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!outcome.passed) ++failures;
  std::printf("%s %2d %s: %s (%.2fs)\n", outcome.passed ? "PASS" : "FAIL", number, title,
              outcome.detail.c_str(), seconds);
  std::fflush(stdout);
}

Outcome from_report(const VerificationReport& r, const std::string& detail) {
  return {r.passed, r.counterexample ? detail + "; " + *r.counterexample : detail};
}

Outcome from_check(const Prop43Report& report, const std::string& name) {
  for (const auto& check : report.checks) {
    if (check.name != name) continue;
    auto detail = check.detail;
    if (check.counterexample) detail += "; " + *check.counterexample;
    return {check.passed, detail};
  }
  return {false, "check missing"};
}

Outcome structure_suite() {
  std::size_t checks = 0;
  const auto fail = [](const std::string& what) { return Outcome{false, what}; };
  const auto members = enumerate_class(named_oracle("W"), 9);
  for (std::size_t n = 0; n <= 9; ++n) {
    for (const auto& pi : members.members[n]) {
      ++checks;
      if (ring_compose(ring_decompose(pi)) != pi) return fail("round trip " + to_string(pi));
      if (reverse_complement(reverse_complement(pi)) != pi || inverse(inverse(pi)) != pi ||
          rotate(pi, 4) != pi || rotate(rotate90(pi), -1) != pi) {
        return fail("involution " + to_string(pi));
      }
      if (n >= 1 && n <= 8) {
        for (const auto& d : one_point_deletions(pi)) {
          if (!in_W(d)) return fail("closure " + to_string(pi));
        }
      }
    }
  }
  for (std::size_t m = 4; m <= 12; ++m) {
    for (auto o : kOrientations) {
      for (auto o2 : kOrientations) {
        ++checks;
        if (!contains(spiral({o, m}), spiral({o2, m + 3}))) {
          return fail("spiral chain m=" + std::to_string(m));
        }
      }
    }
  }
  std::vector<Graph> cycles;
  for (std::size_t n = 5; n <= 9; ++n) cycles.push_back(Graph::cycle(n));
  ++checks;
  if (!antichain_check(prop1_construction(cycles))) return fail("cycle labelling not an antichain");
  return {true, std::to_string(checks) + " checks"};
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else {
      std::fprintf(stderr, "usage: %s [--extended]\n", argv[0]);
      return 2;
    }
  }

  criterion(1, "basis of W to length 7", [] {
    const auto r = run_verify("prop3.3", {});
    return from_report(r, std::to_string(r.details["basis_size"].get<std::size_t>()) + " patterns");
  });

  criterion(2, "basis of W u W^-1", [extended] {
    VerifyBounds b;
    b.max_len = extended ? 12 : 8;
    b.extended = extended;
    const auto r = run_verify("cor3.5", b);
    return from_report(r, std::to_string(r.details["basis_size"].get<std::size_t>()) +
                              " patterns to length " + std::to_string(*b.max_len));
  });

  criterion(3, "counts of W match the series", [] {
    return from_report(run_verify("cor3.2", {}), "n = 0..10");
  });

  // One bounded run serves criteria 4-6; its time is charged to criterion 4.
  Prop43Report prop43;
  criterion(4, "forbidden permutation chart", [&] {
    prop43 = verify_prop_4_3({7, 8, {}});
    return from_check(prop43, "chart");
  });
  criterion(5, "graphs of W u W^-1 avoid the catalogue",
            [&] { return from_check(prop43, "forward"); });
  criterion(6, "catalogue-avoiding graphs are realized",
            [&] { return from_check(prop43, "reverse"); });

  criterion(7, "W_k labelled antichain", [] {
    return from_report(run_verify("prop4.4", {}), "4 <= k < l <= 9");
  });

  criterion(8, "membership oracles agree", [] {
    const auto r = run_verify("oracles", {});
    return from_report(r, std::to_string(r.details["checked"].get<std::size_t>()) +
                              " permutations to length 9");
  });

  criterion(9, "ring word dominance implies containment", [] {
    const auto r = run_verify("encoding", {});
    return from_report(r, std::to_string(r.parameters["samples"].get<std::size_t>()) + " pairs, " +
                              std::to_string(r.details["dominated_pairs"].get<std::size_t>()) +
                              " dominated");
  });

  criterion(10, "labelled path antichain", [] {
    return from_report(run_verify("fig1", {}), "paths of length 3..12");
  });

  criterion(11, "symmetry and structure suite", structure_suite);

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
