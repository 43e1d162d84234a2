#include "doctest.h"

#include "atplanar/decomposer.hpp"
#include "atplanar/error.hpp"
#include "atplanar/gadgets.hpp"
#include "atplanar/io.hpp"
#include "atplanar/testkit/testkit.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace atplanar;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("graph JSON is sorted and compact") {
  Graph g = fixtures::graph({"b", "a", "c"}, {{"c", "b"}, {"b", "a"}});
  CHECK(graph_to_json(g) == R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
}

TEST_CASE("graph JSON round-trips") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = testkit::random_graph(8, 0.4, Seed{s});
    std::string text = graph_to_json(g);
    GraphDocument doc = parse_graph_json(text);
    CHECK_FALSE(doc.plane);
    CHECK(graph_to_json(doc.graph) == text);
  }
  Graph g2 = build_g2();
  CHECK(graph_to_json(parse_graph_json(graph_to_json(g2)).graph) == graph_to_json(g2));
}

TEST_CASE("plane graph JSON round-trips byte for byte") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    PlaneGraph pg = testkit::random_near_triangulation(12 + static_cast<int>(s), 3 + static_cast<int>(s % 6), Seed{s});
    std::string text = plane_graph_to_json(pg);
    GraphDocument doc = parse_graph_json(text);
    REQUIRE(doc.plane);
    CHECK(plane_graph_to_json(*doc.plane) == text);
    CHECK(doc.plane->outer_face() == pg.outer_face());
  }
}

TEST_CASE("malformed graph documents") {
  CHECK(code_of([] { parse_graph_json("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_json("[]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_json(R"({"vertices":["a"]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_json(R"({"vertices":["a",1],"edges":[]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_json(R"({"vertices":["a","b"],"edges":[["a"]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_graph_json(R"({"vertices":["a","b"],"edges":[["a","c"]]})"); }) ==
        ErrorCode::UnknownVertex);
  CHECK(code_of([] { parse_graph_json(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"); }) ==
        ErrorCode::DuplicateEdge);
}

TEST_CASE("decomposition JSON round-trips") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    PlaneGraph pg = testkit::random_near_triangulation(10 + 3 * static_cast<int>(s), 3 + static_cast<int>(s % 5),
                                                       Seed{s});
    Decomposition d = decompose(pg, pg.outer_face()[1], pg.outer_face()[0]);
    std::string text = decomposition_to_json(pg, d);
    Decomposition back = parse_decomposition_json(pg, text);
    CHECK(back == d);
    CHECK(decomposition_to_json(pg, back) == text);
  }
}

TEST_CASE("deep traces are written and read without recursion") {
  PlaneGraph pg = testkit::random_near_triangulation(100000, 3, Seed{2});
  Decomposition d = decompose(pg, pg.outer_face()[0], pg.outer_face()[1]);
  std::string text = decomposition_to_json(pg, d);
  Decomposition back = parse_decomposition_json(pg, text);
  CHECK(back.trace == d.trace);
  CHECK(back.forest == d.forest);
}

TEST_CASE("decomposition JSON shape") {
  PlaneGraph t = fixtures::triangle();
  Decomposition d = decompose(t, 0, 1);
  CHECK(decomposition_to_json(t, d) ==
        R"({"handle":["x","y"],"forest":[["x","y"],["y","z"]],"arcs":[["z","x"]],"trace":{"case":"base","triangle":["x","y","z"]}})");
  CHECK(code_of([&] { parse_decomposition_json(t, R"({"handle":["x","y"],"forest":[],"arcs":[]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([&] {
          parse_decomposition_json(
              t, R"({"handle":["x","y"],"forest":[],"arcs":[],"trace":{"case":"loop","triangle":["x","y","z"]}})");
        }) == ErrorCode::ParseError);
}

TEST_CASE("list assignment JSON round-trips") {
  auto [g, l] = build_lemma1_lists("abbaab");
  std::string text = list_assignment_to_json(g, l);
  CHECK(parse_list_assignment_json(g, text) == l);
  CHECK(code_of([&] { parse_list_assignment_json(g, R"({"lists":{"a":["x"]}})"); }) ==
        ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { parse_list_assignment_json(g, R"({"lists":[]})"); }) == ErrorCode::ParseError);
}

TEST_CASE("report JSON") {
  VerificationReport r("demo");
  r.cases_examined = 5;
  r.tally["k4"] = 5;
  auto pass = nlohmann::json::parse(report_to_json(r));
  CHECK(pass["verdict"] == "PASS");
  CHECK(pass["cases_examined"] == 5);
  CHECK_FALSE(pass.contains("counterexample"));
  CHECK_FALSE(pass.contains("seed"));
  r.seed = 9;
  r.fail("broken");
  auto fail = nlohmann::json::parse(report_to_json(r));
  CHECK(fail["verdict"] == "FAIL");
  CHECK(fail["counterexample"] == "broken");
  CHECK(fail["seed"] == 9);
}

TEST_CASE("certificate and colouring JSON") {
  PlaneGraph c4 = fixtures::quad();
  ForestCertificate c = decompose_any_planar(c4);
  auto doc = nlohmann::json::parse(forest_certificate_to_json(c4.graph(), c));
  CHECK(doc["forest"].size() + doc["arcs"].size() == 4);

  Graph k3 = fixtures::complete(3);
  auto o = nlohmann::json::parse(orientation_to_json(k3, orientation_from_mask(k3, 0)));
  CHECK(o["max_out_degree"] == 2);
  ListAssignment l = ListAssignment::uniform(k3, 3);
  auto col = nlohmann::json::parse(coloring_to_json(k3, l, Coloring{0, 1, 2}));
  CHECK(col["coloring"]["v1"] == "2");
}

TEST_CASE("DOT export") {
  Graph g = build_j1();
  std::string dot = graph_to_dot(g);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
  CHECK(graph_to_dot(g) == dot);

  PlaneGraph q = fixtures::quad_with_chord();
  std::string ddot = decomposition_to_dot(q, decompose(q, q.graph().vertex("x"), q.graph().vertex("y")));
  CHECK(ddot.find("bold") != std::string::npos);
  CHECK(ddot.find("dir=forward") != std::string::npos);
}
