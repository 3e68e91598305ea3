#include "chebwalk/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <memory>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chebwalk");
  std::ostringstream out, err;
  int code = chebwalk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(CHEBWALK_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("walks") {
  auto r = run({"walks", "--input", data("p3.txt"), "--length", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "w_3 = 8\n");

  r = run({"walks", "--input", data("c4.txt"), "--length", "0"});
  CHECK(r.out == "w_0 = 4\n");

  r = run({"walks", "--input", data("directed_c3.txt"), "--length", "2", "--per-vertex"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "s_2 = (1, 1, 1)"));
  CHECK(contains(r.out, "e_2 = (1, 1, 1)"));

  r = run({"--json", "walks", "--input", data("p3.txt"), "--length", "2", "--per-vertex"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == "6");
  CHECK(j["starting"] == nlohmann::json::array({"2", "2", "2"}));
}

TEST_CASE("indices") {
  auto r = run({"indices", "--input", data("p3.txt")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "M1 = 6"));
  CHECK(contains(r.out, "M2 = 4"));
  r = run({"indices", "--input", data("directed_c3.txt")});
  CHECK(r.code == 2);
}

TEST_CASE("check") {
  auto r = run({"check", "zagreb", "--input", data("p4.txt")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "similarly ordered"));
  CHECK(contains(r.out, "holds:      yes"));
  CHECK(contains(r.out, "equality:   no"));

  r = run({"--json", "check", "zagreb", "--input", data("c4.txt")});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["equality"] == true);
  CHECK(j["equality_class"] == "both");

  r = run({"check", "eulerian", "--input", data("transitive_triangle.txt")});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "degree-balanced"));

  r = run({"check", "eulerian", "--input", data("directed_c3.txt")});
  CHECK(r.code == 0);

  r = run({"check", "walk-ineq", "--input", data("transitive_triangle.txt"), "--k", "1", "--l", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "9 >= 3"));

  r = run({"check", "sum-symmetric", "--input", data("sum_symmetric.txt")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "64 <= 68"));

  r = run({"check", "sum-symmetric", "--input", data("swap.txt")});
  CHECK(r.code == 2);

  r = run({"check", "zagreb", "--input", data("p4.txt"), "--k", "2"});
  CHECK(r.code == 2);

  r = run({"check", "bogus", "--input", data("p4.txt")});
  CHECK(r.code == 2);
}

TEST_CASE("matrix") {
  auto r = run({"matrix", "--input", data("swap.txt"), "--k", "1", "--l", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "conversely ordered"));
  CHECK(contains(r.out, "9 >= 8"));

  r = run({"--json", "matrix", "--input", data("identity3.txt"), "--k", "1", "--l", "1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["equality"] == true);

  r = run({"matrix", "--input", data("p3.txt"), "--k", "1", "--l", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("parse and usage errors exit 2") {
  CHECK(run({"walks", "--input", data("loop.txt"), "--length", "1"}).code == 2);
  CHECK(run({"walks", "--input", data("missing.txt"), "--length", "1"}).code == 2);
  CHECK(run({"walks", "--input", data("p3.txt")}).code == 2);
  CHECK(run({"walks", "--input", data("p3.txt"), "--length", "-1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("search") {
  auto r = run({"search", "--class", "tree", "--max-n", "8", "--predicate", "zagreb-violation"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "matched: 0"));
  CHECK(contains(r.err, "n = 8 done"));

  r = run({"--json", "search", "--max-n", "4", "--predicate", "zagreb-equality", "--limit", "100"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  bool has_c4 = false;
  for (const auto& w : j["witnesses"]) has_c4 |= w["graph"] == "undirected 4 4\n0 1\n0 2\n1 3\n2 3\n";
  CHECK(has_c4);

  CHECK(run({"search", "--max-n", "0", "--predicate", "zagreb-violation"}).code == 2);
  CHECK(run({"search", "--max-n", "9", "--predicate", "zagreb-violation"}).code == 2);
  CHECK(run({"search", "--directed", "--max-n", "3", "--predicate", "zagreb-violation"}).code == 2);
  CHECK(run({"search", "--max-n", "3", "--predicate", "nope"}).code == 2);

  r = run({"search", "--directed", "--max-n", "3", "--predicate", "walk-ineq-violation", "--k", "2", "--l", "1"});
  CHECK(r.code == 0);
}

TEST_CASE("search exits 1 when a violation predicate matches") {
  // Zagreb violations exist among larger connected graphs; a match flips the exit code.
  auto r = run({"--json", "search", "--min-n", "7", "--max-n", "7", "--class", "connected,chemical",
                "--predicate", "zagreb-violation", "--limit", "1"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(r.code == (j["matched"].get<std::uint64_t>() > 0 ? 1 : 0));
}

TEST_CASE("search JSON is byte-identical across processes") {
  auto capture = [] {
    std::string cmd = std::string(CHEBWALK_CLI_PATH) +
                      " --json search --max-n 5 --class connected --predicate zagreb-equality 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
    return out;
  };
  const auto a = capture();
  const auto b = capture();
  CHECK_FALSE(a.empty());
  CHECK(a == b);
}
