#include <fstream>
#include <sstream>

#include "doctest.h"
#include "realmot/error.hpp"
#include "realmot/examples.hpp"
#include "realmot/io.hpp"
#include "realmot/validation.hpp"
#include "test_support.hpp"

using namespace realmot;

namespace {

Json load(const std::string& name) {
  std::ifstream in(testsupport::data_path(name));
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace

TEST_CASE("shipped data files match the built-in examples") {
  const char* files[] = {"ex1.json", "ex2.json", "ex3.json"};
  auto examples = shipped_examples();
  for (std::size_t i = 0; i < 3; ++i) {
    CAPTURE(files[i]);
    Json j = load(files[i]);
    Context ctx = context_from_json(j);
    ResolutionDatum r = datum_from_json(j, ctx);
    CHECK(datum_to_json(r) == datum_to_json(examples[i].datum));
    CHECK(j.at("poly").get<std::string>() == examples[i].poly);
    CHECK(context_to_json(ctx) == context_to_json(examples[i].ctx));
  }
}

TEST_CASE("datum round trip and errors") {
  auto e = example_figure8();
  Json j = datum_to_json(e.datum);
  CHECK(datum_to_json(datum_from_json(j, e.ctx)) == j);
  CHECK_THROWS_AS(parse_json("{\"base\": "), Error);
  CHECK_THROWS_AS(datum_from_json(parse_json("{\"strata\": []}"), e.ctx), Error);
  Json bad = j;
  bad["components"][0]["N"] = "two";
  CHECK_THROWS_AS(datum_from_json(bad, e.ctx), Error);
  Json unknown = j;
  unknown["strata"][0]["plus"] = "[Nope]";
  CHECK_THROWS_AS(datum_from_json(unknown, e.ctx), Error);
}

TEST_CASE("torus table json") {
  MultiPoly f = parse_poly("x^2+y^4");
  auto np = newton_polyhedron(f.support(), f.dim());
  auto t = compute_torus_table(f, np);
  Json j = table_to_json(t);
  CHECK(j.contains("face:0:plus"));
  auto back = table_from_json(j, np);
  CHECK(table_to_json(back) == j);
  CHECK(back.provenance == TableProvenance::User);
  CHECK_THROWS_AS(table_from_json(parse_json(R"({"edge:0:plus": "1"})"), np), Error);
  CHECK_THROWS_AS(table_from_json(parse_json(R"({"face:0:up": "1"})"), np), Error);
}

TEST_CASE("fan dump") {
  MultiPoly f = parse_poly("x^6+x^2*y^2+y^6");
  auto np = newton_polyhedron(f.support(), f.dim());
  Json j = fan_to_json(np, dual_fan(np));
  CHECK(j["faces"].size() == 5);
  CHECK(j["cones"].size() == 5);
  CHECK(j["cones"][0].contains("simplicial"));
}

TEST_CASE("complex, function, map and surface json") {
  Json dc = load("double_cover.json");
  auto src = complex_from_json(dc["source"]);
  auto tgt = complex_from_json(dc["target"]);
  auto h = map_from_json(dc, src, tgt);
  CHECK(function_to_json(pi_realize(h)) == parse_json(R"({"values": {"0": 2, "0,1": 2, "0,2": 2, "1": 2, "1,2": 2, "2": 2}})"));
  auto tri = complex_from_json(load("triangle.json"));
  auto f = function_from_json(load("vertex_indicator.json"), tri);
  CHECK(function_to_json(cf_dual(f)) == function_to_json(f));
  CHECK_THROWS_AS(function_from_json(parse_json(R"({"values": {"0,7": 1}})"), tri), Error);
  CHECK_THROWS_AS(function_from_json(parse_json(R"({"values": {"a": 1}})"), tri), Error);
  CHECK_THROWS_AS(map_from_json(parse_json(R"({"0": 0})"), src, tgt), Error);

  auto m = surface_from_json(load("torus16.json"));
  CHECK(surface_to_json(m) == surface_to_json(torus16()));
}

TEST_CASE("report json") {
  MultiPoly f = parse_poly("x^2+y^4");
  auto r = cross_validate(f, example_x2y4().datum, std::nullopt, Sign::Plus);
  Json j = report_to_json(r);
  CHECK(j["verdict"] == "AGREE");
  CHECK(j["routes"]["dl"] == "L + 1");
  CHECK(j["beta"]["wh"] == "u + 1");
}

TEST_CASE("validation suites") {
  auto cases = run_validation("all");
  int fails = 0;
  std::vector<std::string> flagged;
  for (const auto& c : cases) {
    if (c.verdict == Verdict::Fail) {
      ++fails;
      MESSAGE(c.suite << "/" << c.name << ": " << c.got << " " << c.notes);
    }
    if (c.verdict == Verdict::Flagged) flagged.push_back(c.name);
  }
  CHECK(fails == 0);
  CHECK(flagged == std::vector<std::string>{"corfib_sign", "x6_intermediate", "link_dual_identity"});
  int torus = 0;
  for (const auto& c : run_validation("torus")) torus += c.verdict == Verdict::Pass;
  CHECK(torus == 10);
  CHECK_THROWS_AS(run_validation("nope"), Error);

  ValidationOptions printed;
  printed.corfib_printed = true;
  bool x2y4_failed = false;
  for (const auto& c : run_validation("dl", printed))
    if (c.name == "x2y4.psi") x2y4_failed = c.verdict == Verdict::Fail;
  CHECK(x2y4_failed);
}
