#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "widdershins/commands.hpp"
#include "widdershins/error.hpp"

using namespace widdershins;

namespace {

struct Run {
  int status;
  std::string out;
};

const std::string& cache_dir() {
  static const std::string dir = [] {
    std::filesystem::remove_all(WIDDERSHINS_TEST_TMP);
    std::filesystem::create_directories(WIDDERSHINS_TEST_TMP);
    return std::string(WIDDERSHINS_TEST_TMP) + "/cache";
  }();
  return dir;
}

Run run(const std::string& args) {
  const std::string cmd = std::string(WIDDERSHINS_CLI) + " --quiet --cache-dir '" + cache_dir() +
                          "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("queries") {
  CHECK(run("query contains 25413 36285714").out == "true\n");
  CHECK(run("query contains 2413 3142").out == "false\n");
  CHECK(run("query graph-of 2143").out == "C`\n");
  CHECK(run("query member ε").out == "true\n");
  CHECK(run("query member 2413").out == "false\n");
  CHECK(run("query member 2413 Winv").out == "true\n");
  CHECK(run("query decompose 3142").out == "SE4\n");
  CHECK(run("query realizers H").out == "2 3 6 1 4 5\n4 1 2 5 6 3\n");
  CHECK(run("query contains 12x 123").status == 2);
  CHECK(run("query frobnicate 1").status == 2);
}

TEST_CASE("JSON queries carry the text result") {
  const auto text = run("query contains 25413 36285714").out;
  const auto j = Json::parse(run("--json query contains 25413 36285714").out);
  CHECK(j["result"].get<bool>());
  CHECK((j["result"].get<bool>() ? "true\n" : "false\n") == text);
  const auto g = Json::parse(run("--json query graph-of 2143").out);
  CHECK(g["graph6"].get<std::string>() + "\n" == run("query graph-of 2143").out);
}

TEST_CASE("spiral, member, decompose, counts") {
  CHECK(run("spiral --orientation standard --length 4").out == "3 1 4 2\n");
  CHECK(run("spiral -m 5").out == "4 1 5 3 2\n");
  CHECK(run("spiral -m 3").status == 2);
  CHECK(run("member 3142").out == "true\n");
  CHECK(run("decompose 2413").status == 1);
  CHECK(run("decompose 41352").status == 0);
  CHECK(run("counts --max-n 7").out == "1 1 2 6 21 77 276 972\n");
}

TEST_CASE("enumerate") {
  CHECK(run("enumerate --class W --max-n 6 --counts").out == "1 1 2 6 21 77 276\n");
  CHECK(run("enumerate --class av:2143,3412 --max-n 5 --counts").out == "1 1 2 6 22 86\n");
  CHECK(run("enumerate --max-n 0 --counts").out == "1\n");
  const auto listing = run("enumerate --class av:21 --max-n 2").out;
  CHECK(listing == "1 1 1\n# length 0 (1)\nε\n# length 1 (1)\n1\n# length 2 (1)\n1 2\n");
  const std::string path = std::string(WIDDERSHINS_TEST_TMP) + "/counts.txt";
  CHECK(run("enumerate --max-n 4 --counts --output '" + path + "'").status == 0);
  CHECK(read_file(path) == "1 1 2 6 21\n");
  CHECK(run("enumerate --max-n 3 --output /nonexistent-dir/x.txt").status == 2);
  CHECK(run("enumerate --class bogus --max-n 3").status == 2);
}

TEST_CASE("basis and union-basis") {
  const auto out = run("basis --class skew-merged --max-len 5").out;
  CHECK(out == "2 1 4 3\n3 4 1 2\n");
  CHECK(run("union-basis --left 21 --right 12").out == "1 3 2\n2 1 3\n2 3 1\n3 1 2\n");
}

TEST_CASE("verify reports") {
  const auto r = run("verify prop3.3 --max-len 7");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("PASS prop3.3 max_len=7\n", 0) == 0);
  CHECK(r.out.find("basis_size: 13") != std::string::npos);
  const auto counts = run("verify cor3.2 --max-n 10");
  CHECK(counts.status == 0);
  CHECK(counts.out.find("counts: 1 1 2 6 21 77 276 972 3397 11845 41294") != std::string::npos);
  CHECK(run("verify prop4.4 --max-k 9").status == 0);
  CHECK(run("verify fig1").status == 0);
  CHECK(run("verify nonsense").status == 2);
  CHECK(run("verify cor3.5 --max-len 9").status == 2);  // needs --extended
  CHECK(run("verify cor3.2 --max-n 40").status == 2);
}

TEST_CASE("warm cache reruns are byte-identical") {
  const auto cold = run("--json verify cor3.2 --max-n 9").out;
  const auto warm = run("--json verify cor3.2 --max-n 9").out;
  CHECK(cold == warm);
  const auto no_cache = run("--no-cache --json verify cor3.2 --max-n 9").out;
  CHECK(no_cache == warm);
  CHECK(run("--workers 1 --json verify cor3.2 --max-n 9").out == warm);
}

TEST_CASE("report JSON round trip") {
  const auto report = run_verify("prop3.3", VerifyBounds{6, {}, {}, {}, {}, {}, false});
  CHECK(report.passed);
  CHECK(report_from_json(to_json(report, true)) == report);
  auto copy = report_from_json(to_json(report));
  copy.wall_seconds = report.wall_seconds;
  CHECK(copy == report);
  CHECK(report_from_json(Json::parse(to_json(report).dump())).details == report.details);

  VerificationReport failing;
  failing.claim = "x";
  failing.passed = false;
  failing.counterexample = "2 1";
  CHECK(report_from_json(to_json(failing)) == failing);
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"claim":"x"})")), ParseError);
  CHECK(to_text(failing).rfind("FAIL x\n  counterexample: 2 1\n", 0) == 0);
}

TEST_CASE("run_verify validation") {
  CHECK_THROWS_AS(run_verify("nope", {}), ParseError);
  VerifyBounds big;
  big.max_len = 13;
  big.extended = true;
  CHECK_THROWS_AS(run_verify("cor3.5", big), DomainExceeded);
  CHECK(known_claims().size() == 9);
}

TEST_CASE("lwqo and catalog commands") {
  CHECK(run("lwqo antichain --family wk --from 4 --to 9").out == "antichain\n");
  CHECK(run("lwqo antichain --family path --from 3 --to 12").status == 0);
  CHECK(run("lwqo antichain --family cycles --from 5 --to 9").status == 0);
  CHECK(run("lwqo antichain --family wk --from 3 --to 5").status == 2);
  const auto cat = run("catalog").out;
  CHECK(cat.rfind("2K2 C`\nC4 ", 0) == 0);
  CHECK(std::count(cat.begin(), cat.end(), '\n') == 14);
  CHECK(run("catalog --dot").out.find("graph \"X160\" {") != std::string::npos);
}
