#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "edgering/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = edgering::runCli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze on the n=3 family") {
  auto r = run({"analyze", "--family", "gn", "--n", "3"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["h"] == json::array({1, 2, 3, 1}));
  CHECK(j["canonical"]["verdicts"]["gorenstein"] == false);
  CHECK(j["canonical"]["verdicts"]["almost_gorenstein"] == true);
  CHECK(j["canonical"]["cm_type"] == 2);
  CHECK(j["sources_agree"] == true);
  CHECK(j["facet_count"] == 7);
  // timings go to stderr, never into the JSON payload
  CHECK(j.find("timings") == j.end());
  CHECK(r.err.find("timing") != std::string::npos);
}

TEST_CASE("groebner subcommand on the n=2 family") {
  auto r = run({"groebner", "--family", "gn", "--n", "2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["groebner_basis"].size() == 1);
  CHECK(j["groebner_basis"][0]["plus"] == json::array({1, 1, 0, 0, 0, 1}));
  CHECK(j["groebner_basis"][0]["minus"] == json::array({0, 0, 1, 1, 1, 0}));
  CHECK(j["initial_ideal"]["squarefree"] == true);

  auto pretty = run({"groebner", "--family", "gn", "--n", "2", "--format", "pretty"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("x1*y1*z2 - z1*x2*y2") != std::string::npos);
}

TEST_CASE("hvector output is byte-identical across runs") {
  auto a = run({"hvector", "--family", "gn", "--n", "4", "--check-degrees", "2"});
  auto b = run({"hvector", "--family", "gn", "--n", "4", "--check-degrees", "2"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);

  auto c = run({"analyze", "--family", "complete", "--m", "4"});
  auto d = run({"analyze", "--family", "complete", "--m", "4"});
  REQUIRE(c.code == 0);
  CHECK(c.out == d.out);
  auto j = json::parse(a.out);
  CHECK(j["h"] == json::array({1, 3, 6, 4, 1}));
  CHECK(j["dim"] == 9);
  CHECK(j["sources_agree"] == true);
  for (const auto& check : j["hilbert_checks"]) CHECK(check["equal"] == true);
}

TEST_CASE("hvector is independent of the thread count") {
  auto a = run({"hvector", "--family", "complete", "--m", "5", "--threads", "1"});
  auto b = run({"hvector", "--family", "complete", "--m", "5", "--threads", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("verdicts subcommand") {
  auto r = run({"verdicts", "--family", "gn", "--n", "2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["gorenstein"] == true);
  CHECK(j["almost_gorenstein"] == true);
  CHECK(j["cm_type"] == 1);
  CHECK(j["e_tilde"] == 0);
}

TEST_CASE("complex subcommand with cone point suppression") {
  auto r = run({"complex", "--family", "gn", "--n", "2", "--suppress-cone-points"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["complex"]["num_vertices"] == 3);
  CHECK(j["complex"]["facets"].size() == 3);
  CHECK(j["suppressed_cone_points"].size() == 3);

  auto searched = run({"complex", "--family", "gn", "--n", "2", "--search-shelling"});
  REQUIRE(searched.code == 0);
  CHECK(json::parse(searched.out)["shelling_found"] == true);
}

TEST_CASE("graph JSON input") {
  const char* path = "cli_test_triangle.json";
  {
    std::ofstream f(path);
    f << R"({"num_vertices": 3, "edges": [[0,1],[1,2],[0,2]]})";
  }
  auto r = run({"hvector", "--input", path});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["h"] == json::array({1}));
  CHECK(j["dim"] == 3);
  std::remove(path);
}

TEST_CASE("error handling and exit codes") {
  CHECK(run({"analyze", "--input", "missing.json"}).code == 3);
  CHECK(run({"analyze", "--family", "nosuch", "--n", "3"}).code == 3);
  CHECK(run({"analyze"}).code == 3);  // neither --family nor --input
  CHECK(run({"nosuchcommand"}).code == 3);
  CHECK(run({"canonical", "--family", "completebipartite", "--m", "2", "--n", "2"}).code == 3);
  CHECK(run({"hvector", "--family", "gn", "--n", "1"}).code == 3);
  CHECK(run({"hvector", "--family", "gn", "--n", "3", "--order", "bogus"}).code == 3);

  // a walk bound below the primitive length leaves the ideal empty and the
  // dimension check trips: invariant violation
  CHECK(run({"hvector", "--family", "gn", "--n", "2", "--max-walk-len", "4"}).code == 2);

  const char* path = "cli_test_malformed.json";
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(run({"hvector", "--input", path}).code == 3);
  std::remove(path);

  const char* disconnected = "cli_test_disconnected.json";
  {
    std::ofstream f(disconnected);
    f << R"({"num_vertices": 4, "edges": [[0,1],[2,3]]})";
  }
  CHECK(run({"hvector", "--input", disconnected}).code == 3);
  std::remove(disconnected);
}

TEST_CASE("families listing and formats") {
  auto r = run({"families"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["families"].size() == 3);

  auto csv = run({"hvector", "--family", "gn", "--n", "2", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("dim,5") != std::string::npos);
  auto csv2 = run({"hvector", "--family", "gn", "--n", "2", "--format", "csv"});
  CHECK(csv.out == csv2.out);

  auto pretty = run({"analyze", "--family", "gn", "--n", "2", "--format", "pretty"});
  REQUIRE(pretty.code == 0);
  CHECK(pretty.out.find("h = (1, 1, 1)") != std::string::npos);
  CHECK(pretty.out.find("stage timings") != std::string::npos);
}

TEST_CASE("custom order flag") {
  auto r = run({"groebner", "--family", "gn", "--n", "2", "--order",
                "x1,y1,z1,x2,y2,z2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["groebner_basis"].size() == 1);
}
