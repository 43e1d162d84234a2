#include "doctest.h"

#include <array>
#include <numeric>

#include "atplanar/error.hpp"
#include "atplanar/gadgets.hpp"
#include "atplanar/graph.hpp"
#include "atplanar/orientation.hpp"
#include "atplanar/testkit/testkit.hpp"
#include "fixtures.hpp"

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

// Lexicographically first 4-clique by brute force over index quadruples.
std::optional<std::array<Vertex, 4>> k4_oracle(const Graph& g) {
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) && g.adjacent(b, d) &&
              g.adjacent(c, d))
            return std::array<Vertex, 4>{a, b, c, d};
  return std::nullopt;
}

}  // namespace

TEST_CASE("vertices are ordered lexicographically") {
  Graph g = fixtures::graph({"b", "c", "a"}, {{"c", "a"}, {"b", "a"}});
  CHECK(g.name(0) == "a");
  CHECK(g.name(2) == "c");
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edge(0).u == 0);
  CHECK(g.edge(0).v == 1);
  CHECK(g.edge(1).v == 2);
  CHECK(g.vertex("b") == 1);
  CHECK_FALSE(g.find_vertex("z"));
}

TEST_CASE("graph construction rejects malformed input") {
  CHECK(code_of([] { fixtures::graph({"a", "a"}, {}); }) == ErrorCode::DuplicateVertex);
  CHECK(code_of([] { fixtures::graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { fixtures::graph({"a"}, {{"a", "a"}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { fixtures::graph({"a"}, {{"a", "q"}}); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("degree sum and handshake") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = testkit::random_graph(9, 0.4, Seed{s});
    int sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("subgraphs") {
  Graph k5 = fixtures::complete(5);
  EdgeMask drop(k5.edge_count());
  drop.insert(*k5.edge_id(0, 1));
  Graph h = k5.without_edges(drop);
  CHECK(h.edge_count() == 9);
  CHECK_FALSE(h.adjacent(0, 1));
  CHECK(h.vertex_count() == 5);

  std::array<Vertex, 3> keep{0, 2, 4};
  Graph t = k5.induced(keep);
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 3);
  CHECK(t.name(1) == "v2");

  CHECK(fixtures::graph({"a", "b", "c"}, {{"a", "b"}}).component_count() == 2);
  CHECK(fixtures::cycle(6).connected());
}

TEST_CASE("forest and clique predicates") {
  Graph c4 = fixtures::cycle(4);
  std::vector<EdgeId> all(4);
  std::iota(all.begin(), all.end(), 0);
  CHECK_FALSE(is_forest(c4, all));
  all.pop_back();
  CHECK(is_forest(c4, all));

  Graph k4 = fixtures::complete(4);
  std::array<Vertex, 4> q{0, 1, 2, 3};
  CHECK(is_clique(k4, q));
  EdgeMask cut(k4.edge_count());
  cut.insert(0);
  CHECK_FALSE(is_clique(k4, q, &cut));
}

TEST_CASE("find_k4 examples") {
  auto k4 = find_k4(fixtures::complete(4));
  REQUIRE(k4);
  CHECK(*k4 == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK_FALSE(find_k4(fixtures::cycle(5)));

  Graph j3 = build_j3();
  auto w = find_k4(j3);
  REQUIRE(w);
  std::array<std::string, 4> names;
  for (int i = 0; i < 4; ++i) names[static_cast<std::size_t>(i)] = j3.name((*w)[static_cast<std::size_t>(i)]);
  CHECK(names == std::array<std::string, 4>{"a", "b", "c", "d"});
}

TEST_CASE("find_k4 agrees with brute force") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    int n = 4 + static_cast<int>(s % 9);
    Graph g = testkit::random_graph(n, 0.55, Seed{s});
    CAPTURE(s);
    CHECK(find_k4(g) == k4_oracle(g));
  }
}

TEST_CASE("orientation invariants") {
  Graph k3 = fixtures::complete(3);
  CHECK(code_of([&] { Orientation(k3, {{0, 1, -1}, {1, 0, -1}}); }) == ErrorCode::InvalidArc);
  Graph p = fixtures::graph({"a", "b", "c"}, {{"a", "b"}});
  CHECK(code_of([&] { Orientation(p, {{0, 2, -1}}); }) == ErrorCode::InvalidArc);

  Orientation cyc(k3, {{0, 1, -1}, {1, 2, -1}, {2, 0, -1}});
  CHECK_FALSE(cyc.acyclic());
  CHECK(cyc.max_out_degree() == 1);
  CHECK(orientation_from_mask(k3, 0).acyclic());

  for (std::uint64_t s = 0; s < 30; ++s) {
    Graph g = testkit::random_graph(7, 0.5, Seed{s});
    Rng rng(Seed{s});
    Orientation d = testkit::random_orientation(g, rng);
    int sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      sum += d.out_degree(v);
      CHECK(d.out_degree(v) + d.in_degree(v) == g.degree(v));
    }
    CHECK(sum == d.arc_count());
  }
}
