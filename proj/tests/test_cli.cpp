#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gcond/cli.hpp"
#include "gcond/plane_graph.hpp"
#include "gcond/regions.hpp"

using namespace gcond;

namespace {
CommandOutcome run(std::vector<std::string> args) { return run_command(args); }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count") {
    auto r = run({"count", "aztec:4", "--method", "all"});
    CHECK(r.exit_status == 0);
    CHECK(r.out == "1024 1024 1024\n");
    CHECK(run({"count", "aztec:4"}).out == "1024 1024 1024\n");
    CHECK(run({"count", "aztec:3", "--method", "rec"}).out == "64\n");
    CHECK(run({"count", "grid:4,4", "--method", "oracle"}).out == "36\n");
    CHECK(run({"count", "rect:3:1,1"}).out.find("n/a") != std::string::npos);
    CHECK(run({"count", "aztec:2:fortress3", "--method", "formula"}).out == "5/4\n");
  }

  TEST_CASE("usage errors exit 2") {
    CHECK(run({"count", "rect:3:5,5"}).exit_status == 2);
    CHECK(run({"count", "blob:1"}).exit_status == 2);
    CHECK(run({"count", "aztec:2", "--method", "guess"}).exit_status == 2);
    CHECK(run({"count", "grid:3,3", "--method", "rec"}).exit_status == 2);
    CHECK(run({}).exit_status == 2);
    CHECK(run({"verify", "nothing"}).exit_status == 2);
    CHECK(run({"verify", "pythagorean", "3"}).exit_status == 2);
    CHECK(run({"verify", "fibonacci", "5", "3", "3"}).exit_status == 2);
    CHECK(run({"table", "aztec", "3..1"}).exit_status == 2);
    CHECK(run({"--help"}).exit_status == 0);
  }

  TEST_CASE("wsum and prob") {
    CHECK(run({"wsum", "hex:1,1,1"}).out == "1 + q\n");
    CHECK(run({"wsum", "aztec:3:fortress1"}).out == "25/16\n");
    PlaneBipartiteGraph g = grid(2, 2);
    auto r = run({"prob", "grid:2,2", "0", "1"});
    CHECK(r.exit_status == 0);
    CHECK(r.out == "1/2\n");
    CHECK(run({"prob", "grid:2,2", "0", "3"}).exit_status != 0);
  }

  TEST_CASE("verify") {
    auto p = run({"verify", "pythagorean", "2"});
    CHECK(p.exit_status == 0);
    CHECK(p.out.find("holds true") != std::string::npos);
    CHECK(run({"verify", "bilinear", "grid:2,5"}).exit_status == 0);
    CHECK(run({"verify", "bilinear", "grid:2,4", "--mechanics"}).out.find("mechanics true") != std::string::npos);
    CHECK(run({"verify", "altcycle", "aztec:2"}).exit_status == 0);
    CHECK(run({"verify", "placement", "3"}).exit_status == 0);
    CHECK(run({"verify", "fibonacci", "5", "2", "4"}).exit_status == 0);
    CHECK(run({"verify", "pp-relations", "1", "1", "1"}).exit_status == 0);
    auto z = run({"verify", "zeilberger", "2", "2", "2"});
    CHECK(z.exit_status == 0);
    CHECK(z.out.find("shifted true") != std::string::npos);
  }

  TEST_CASE("bilinear from a graph file") {
    const std::string path = "cli_test_graph.txt";
    {
      std::ofstream f(path);
      f << serialize_graph(grid(2, 6));
    }
    auto r = run({"verify", "bilinear", path});
    std::remove(path.c_str());
    CHECK(r.exit_status == 0);
    CHECK(r.out.find("pattern ACBD") != std::string::npos);
  }

  TEST_CASE("tables") {
    CHECK(run({"table", "aztec", "0..3"}).out == "0 1\n1 2\n2 8\n3 64\n");
    CHECK(run({"table", "fibonacci", "1..6"}).out == "1 1\n2 1\n3 2\n4 3\n5 5\n6 8\n");
    CHECK(run({"table", "tcpp", "2", "1"}).out == "2 1 2\n");
    CHECK(run({"table", "macmahon", "1", "1", "1"}).out == "1 1 1 1 + q\n");
    CHECK(run({"table", "fortress", "1"}).out == "1 25/16 25/16 5/4\n");
    CHECK(run({"table", "rect", "1"}).exit_status == 0);
  }

  TEST_CASE("export round trip") {
    auto r = run({"export", "aztec:2"});
    CHECK(r.exit_status == 0);
    CHECK(parse_graph(r.out) == aztec_diamond(2).graph);
    const std::string path = "cli_export.txt";
    CHECK(run({"export", "grid:2,3", "--out", path}).exit_status == 0);
    std::ifstream in(path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::remove(path.c_str());
    CHECK(parse_graph(text) == grid(2, 3));
  }
}
