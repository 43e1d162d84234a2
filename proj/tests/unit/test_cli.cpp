#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "atplanar/io.hpp"
#include "atplanar/testkit/testkit.hpp"
#include "cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using namespace atplanar;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string k4_json() { return graph_to_json(fixtures::complete(4)); }

}  // namespace

TEST_CASE("lemma verification exit codes") {
  auto ok = run({"verify", "lemma", "--name", "lemma2"});
  CHECK(ok.code == cli::kSuccess);
  CHECK(ok.out.find("cases examined") != std::string::npos);
  CHECK(run({"verify", "lemma", "--name", "nosuch"}).code == cli::kUsageError);
  CHECK(run({"verify", "lemma", "--name", "lemma1", "--selector", "ab"}).code == cli::kUsageError);
  CHECK(run({"verify", "lemma", "--name", "lemma2", "--selector", "aaaaaa"}).code == cli::kUsageError);
}

TEST_CASE("json reports") {
  auto r = run({"--json", "verify", "lemma", "--name", "lemma1", "--selector", "abaaba"});
  REQUIRE(r.code == cli::kSuccess);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "PASS");
  auto trailing = run({"verify", "lemma", "--name", "theorem7-core", "--json"});
  CHECK(nlohmann::json::parse(trailing.out)["verdict"] == "PASS");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"frobnicate"}).code == cli::kUsageError);
  CHECK(run({"gen", "graph", "--n", "5"}).code == cli::kUsageError);
  CHECK(run({"decompose", "--input", "-"}, "not json").code == cli::kUsageError);
  CHECK(run({"decompose", "--input", "/nonexistent/x.json"}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == cli::kSuccess);
  auto sub = run({"verify", "sampled", "--help"});
  CHECK(sub.code == cli::kSuccess);
  CHECK(sub.out.find("--samples") != std::string::npos);
}

TEST_CASE("decompose with parity check") {
  PlaneGraph pg = testkit::random_near_triangulation(8, 4, Seed{42});
  std::string doc = plane_graph_to_json(pg);
  const Graph& g = pg.graph();
  std::string handle = g.name(pg.outer_face()[0]) + "," + g.name(pg.outer_face()[1]);
  auto r = run({"decompose", "--input", "-", "--handle", handle, "--check", "parity"}, doc);
  CHECK(r.code == cli::kSuccess);
  Decomposition d = parse_decomposition_json(pg, r.out);
  CHECK(d.handle_x == pg.outer_face()[0]);
  CHECK(d.handle_y == pg.outer_face()[1]);

  auto bad = run({"decompose", "--input", "-", "--handle", g.name(pg.outer_face()[0]) + ",nope"}, doc);
  CHECK(bad.code == cli::kUsageError);
}

TEST_CASE("parity cap overrun exits 3") {
  PlaneGraph pg = testkit::random_near_triangulation(30, 4, Seed{1});
  auto r = run({"decompose", "--input", "-", "--check", "parity"}, plane_graph_to_json(pg));
  CHECK(r.code == cli::kCapExceeded);
  auto raised = run({"decompose", "--input", "-", "--check", "parity", "--parity-cap", "5"},
                    plane_graph_to_json(testkit::random_near_triangulation(8, 4, Seed{42})));
  CHECK(raised.code == cli::kCapExceeded);
}

TEST_CASE("verify decomposition from files") {
  PlaneGraph q = fixtures::quad_with_chord();
  std::string gpath = "cli_test_quad.json", dpath = "cli_test_quad_dec.json";
  std::ofstream(gpath) << plane_graph_to_json(q);
  auto dec = run({"decompose", "--input", gpath, "--handle", "x,y", "--output", dpath});
  REQUIRE(dec.code == cli::kSuccess);
  CHECK(run({"verify", "decomposition", "--input", gpath, "--decomposition", dpath, "--mode", "parity"}).code ==
        cli::kSuccess);

  std::ofstream(dpath) << R"({"handle":["x","y"],"forest":[["x","y"],["v","y"],["u","v"]],"arcs":[["x","v"],["u","y"]],)"
                       << R"("trace":{"case":"base","triangle":["x","y","v"]}})";
  CHECK(run({"verify", "decomposition", "--input", gpath, "--decomposition", dpath}).code ==
        cli::kVerificationFailed);
  std::remove(gpath.c_str());
  std::remove(dpath.c_str());
}

TEST_CASE("decompose any planar graph") {
  auto r = run({"decompose", "--any", "--input", "-", "--check", "structural"}, plane_graph_to_json(fixtures::quad()));
  CHECK(r.code == cli::kSuccess);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["forest"].size() + doc["arcs"].size() == 4);
}

TEST_CASE("alon-tarsi commands") {
  auto n = run({"at", "number", "--input", "-"}, k4_json());
  CHECK(n.code == cli::kSuccess);
  CHECK(n.out == "4\n");
  auto c = run({"at", "coefficient", "--input", "-", "--eta", "v0:2,v1:1"}, graph_to_json(fixtures::complete(3)));
  CHECK(c.code == cli::kSuccess);
  CHECK((c.out == "1\n" || c.out == "-1\n"));
  CHECK(run({"at", "coefficient", "--input", "-", "--eta", "v0:1"}, graph_to_json(fixtures::complete(3))).code ==
        cli::kUsageError);
  CHECK(run({"at", "orientation", "--input", "-", "--k", "2"}, graph_to_json(fixtures::complete(3))).code ==
        cli::kVerificationFailed);
  CHECK(run({"at", "orientation", "--input", "-", "--k", "2"}, graph_to_json(fixtures::cycle(4))).code ==
        cli::kSuccess);
  CHECK(run({"at", "number", "--input", "-", "--orientation-cap", "5"}, k4_json()).code == cli::kCapExceeded);
}

TEST_CASE("choose check") {
  std::string lists = "lemma_lists.json";
  auto [g, l] = build_lemma1_lists("bbaaba");
  std::ofstream(lists) << list_assignment_to_json(g, l);
  CHECK(run({"choose", "check", "--input", "-", "--lists", lists, "--k", "3"}, graph_to_json(g)).code ==
        cli::kSuccess);
  CHECK(run({"choose", "check", "--input", "-", "--lists", lists}, graph_to_json(g)).code ==
        cli::kVerificationFailed);
  Graph c4 = fixtures::cycle(4);
  std::ofstream(lists) << list_assignment_to_json(c4, ListAssignment::uniform(c4, 2));
  auto ok = run({"choose", "check", "--input", "-", "--lists", lists}, graph_to_json(c4));
  CHECK(ok.code == cli::kSuccess);
  CHECK(nlohmann::json::parse(ok.out)["coloring"].size() == 4);
  std::remove(lists.c_str());
}

TEST_CASE("generators and gadgets are deterministic") {
  auto a = run({"gen", "triangulation", "--n", "20", "--boundary", "5", "--seed", "3"});
  auto b = run({"gen", "triangulation", "--n", "20", "--boundary", "5", "--seed", "3"});
  CHECK(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  CHECK(parse_graph_json(a.out).plane);
  CHECK(run({"gen", "triangulation", "--n", "4", "--boundary", "5", "--seed", "3"}).code == cli::kUsageError);
  auto g = run({"gen", "graph", "--n", "5", "--p", "1", "--seed", "0"});
  CHECK(parse_graph_json(g.out).graph.edge_count() == 10);

  auto j = run({"gadget", "build", "JFamily", "--selector", "aabbab"});
  CHECK(j.code == cli::kSuccess);
  CHECK(parse_graph_json(j.out).graph.vertex_count() == 20);
  CHECK(run({"gadget", "build", "jfamily"}).code == cli::kUsageError);
  auto dot = run({"gadget", "build", "D", "--format", "dot"});
  CHECK(dot.out.rfind("graph", 0) == 0);
}

TEST_CASE("sampled verification") {
  auto r = run({"--json", "verify", "sampled", "--target", "theorem7", "--samples", "20", "--seed", "7"});
  CHECK(r.code == cli::kSuccess);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["seed"] == 7);
  CHECK(doc["cases_examined"] == 20);
  CHECK(run({"verify", "sampled", "--target", "theorem7", "--samples", "20"}).code == cli::kUsageError);
  auto w1 = run({"verify", "sampled", "--target", "corollary3", "--samples", "12", "--seed", "2", "--workers", "1"});
  auto w3 = run({"verify", "sampled", "--target", "corollary3", "--samples", "12", "--seed", "2", "--workers", "3"});
  CHECK(w1.out == w3.out);
}
