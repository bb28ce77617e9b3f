#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "slee/cli.hpp"
#include "slee/families.hpp"
#include "slee/graph.hpp"

using namespace slee;
using nlohmann::ordered_json;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args,
              const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute json on inline input") {
  const CliResult r = run({"compute", "A_"});
  CHECK(r.status == 0);
  const ordered_json parsed = ordered_json::parse(r.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["n"] == 2);
  CHECK(parsed[0]["m"] == 1);
  CHECK(parsed[0]["SLEE"] == "8.38905609893");
  CHECK(parsed[0]["LEE"] == "8.38905609893");
  CHECK(parsed[0]["q_spectrum"][0] == "2");

  // Fixed key order survives a parse/dump round trip byte-for-byte.
  CHECK(ordered_json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("compute csv carries the same numerals as json") {
  const CliResult csv = run({"compute", "A_", "--format", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out.find("n,m,EE,LEE,SLEE,slee_series,q_spectrum") == 0);
  CHECK(csv.out.find("8.38905609893") != std::string::npos);

  const CliResult json = run({"compute", "A_"});
  const ordered_json parsed = ordered_json::parse(json.out);
  const std::string slee = parsed[0]["SLEE"];
  CHECK(csv.out.find("," + slee + ",") != std::string::npos);
}

TEST_CASE("compute reads stdin when no input flag") {
  const CliResult r = run({"compute"}, "A_\nBw\n");
  CHECK(r.status == 0);
  CHECK(ordered_json::parse(r.out).size() == 2);
}

TEST_CASE("compute on empty input emits nothing and succeeds") {
  const CliResult r = run({"compute"}, "");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());
}

TEST_CASE("compute rejects malformed graph6 with a line number") {
  const CliResult r = run({"compute"}, "A_\n!!bad!!\n");
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("compute reads files and rejects double input sources") {
  const std::string path = "cli_test_input.g6";
  {
    std::ofstream f(path);
    f << "A_\n\nBw\n";  // blank lines are skipped
  }
  const CliResult r = run({"compute", "-i", path});
  CHECK(r.status == 0);
  CHECK(ordered_json::parse(r.out).size() == 2);

  const CliResult both = run({"compute", "A_", "-i", path});
  CHECK(both.status == 2);

  const CliResult missing = run({"compute", "-i", "no_such_file.g6"});
  CHECK(missing.status == 2);
  std::remove(path.c_str());
}

TEST_CASE("moments subcommand") {
  const CliResult r = run({"moments", "A_", "--kmax", "2"});
  CHECK(r.status == 0);
  const ordered_json parsed = ordered_json::parse(r.out);
  CHECK(parsed[0]["traces"] == std::vector<std::string>{"2", "2", "4"});
}

TEST_CASE("walks subcommand") {
  const CliResult r = run({"walks", "A_", "--kmax", "2"});
  CHECK(r.status == 0);
  const ordered_json parsed = ordered_json::parse(r.out);
  const auto& k2 = parsed[0]["counts"][2];
  CHECK(k2["k"] == 2);
  CHECK(k2["trace"] == "4");
  CHECK(k2["matrix"][0][1] == "2");
}

TEST_CASE("family subcommand") {
  const CliResult h = run({"family", "h", "--n", "7", "--d", "4", "--j", "2"});
  CHECK(h.status == 0);
  int lines = 0;
  std::istringstream stream(h.out);
  for (std::string line; std::getline(stream, line);) {
    ++lines;
    CHECK(parse_graph6(line).order() == 7);
  }
  CHECK(lines == 9);

  const CliResult g = run({"family", "g", "--n", "6", "--r", "3"});
  CHECK(g.status == 0);
  const Graph member = parse_graph6(g.out.substr(0, g.out.find('\n')));
  CHECK(member.order() == 6);
  CHECK(are_isomorphic(member, g_extremal(6, 3)));

  const CliResult p = run({"family", "path", "--n", "4"});
  CHECK(p.out == write_graph6(path(4)) + "\n");

  const CliResult bad = run({"family", "h1", "--n", "7", "--d", "6"});
  CHECK(bad.status == 2);
  CHECK(bad.err.find("2 < d < n-1") != std::string::npos);

  const CliResult unknown = run({"family", "mystery", "--n", "4"});
  CHECK(unknown.status == 2);
}

TEST_CASE("sweep subcommand with prediction") {
  const std::string predicted = write_graph6(complete_minus_edge(4));
  const CliResult r = run({"sweep", "--n", "4", "--filter", "diameter=2",
                           "--predicted", predicted});
  CHECK(r.status == 0);
  const ordered_json parsed = ordered_json::parse(r.out);
  CHECK(parsed["matched_prediction"] == true);
  CHECK(parsed["iso_classes"] == 1);

  // A wrong prediction flips the exit status but still reports.
  const CliResult wrong = run({"sweep", "--n", "4", "--filter", "diameter=2",
                               "--predicted", write_graph6(path(4))});
  CHECK(wrong.status == 1);
  CHECK(ordered_json::parse(wrong.out)["matched_prediction"] == false);

  const CliResult badfilter = run({"sweep", "--n", "4", "--filter", "girth=3"});
  CHECK(badfilter.status == 2);
}

TEST_CASE("verify subcommands and the exit code contract") {
  CHECK(run({"verify", "theorem-diameter", "--n", "5", "--d", "3"}).status == 0);
  CHECK(run({"verify", "theorem-cut", "--n", "5", "--r", "1"}).status == 0);
  CHECK(run({"verify", "theorem-cut", "--n", "7", "--r", "9"}).status == 2);
  CHECK(run({"verify", "h-descent", "--n", "6", "--d", "4", "--j", "2"}).status ==
        0);
  CHECK(run({"verify", "neighbor-bound", "--n", "4"}).status == 0);
  CHECK(run({"verify", "moment-walk", "--n", "4", "--kmax", "4"}).status == 0);
  CHECK(run({"verify", "lemma-relocate"}).status == 0);
  CHECK(run({"verify", "lemma-edge-add", "--n", "6", "--samples", "40"})
            .status == 0);

  // P_3 plus an isolated vertex; shifting the isolated edge to the center.
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const CliResult shift = run({"verify", "lemma-shift", write_graph6(g), "--v",
                               "0", "--u", "1", "--ws", "3"});
  CHECK(shift.status == 0);
  CHECK(ordered_json::parse(shift.out)["hypotheses_met"] == true);

  // Precondition violation: w already adjacent to u.
  const CliResult bad = run({"verify", "lemma-shift", "Bg", "--v", "0", "--u",
                             "1", "--ws", "2"});
  CHECK(bad.status == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"compute", "--format", "xml"}).status == 2);
  const CliResult help = run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("compute") != std::string::npos);
}
