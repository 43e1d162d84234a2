#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atplanar/graph.hpp"
#include "atplanar/plane_graph.hpp"

namespace fixtures {

struct Point {
  std::string name;
  double x;
  double y;
};

using NamePairs = std::vector<std::pair<std::string, std::string>>;

// Straight-line drawing to plane graph: neighbours sorted counter-clockwise.
inline atplanar::PlaneGraph drawn(const std::vector<Point>& pts, const NamePairs& edges,
                                  const std::vector<std::string>& outer) {
  std::map<std::string, std::pair<double, double>> at;
  std::vector<std::string> names;
  for (const auto& p : pts) {
    at[p.name] = {p.x, p.y};
    names.push_back(p.name);
  }
  std::map<std::string, std::vector<std::string>> rot;
  for (const auto& [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (auto& [v, list] : rot) {
    auto [vx, vy] = at[v];
    std::sort(list.begin(), list.end(), [&](const std::string& p, const std::string& q) {
      return std::atan2(at[p].second - vy, at[p].first - vx) < std::atan2(at[q].second - vy, at[q].first - vx);
    });
  }
  return atplanar::build_plane_graph(names, edges, rot, outer);
}

inline atplanar::Graph graph(std::vector<std::string> vertices, const NamePairs& edges) {
  return atplanar::Graph(std::move(vertices), edges);
}

inline std::string vname(int i) { return "v" + std::to_string(i); }

inline atplanar::Graph complete(int n) {
  std::vector<std::string> vs;
  NamePairs es;
  for (int i = 0; i < n; ++i) vs.push_back(vname(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(vname(i), vname(j));
  return graph(vs, es);
}

inline atplanar::Graph cycle(int n) {
  std::vector<std::string> vs;
  NamePairs es;
  for (int i = 0; i < n; ++i) {
    vs.push_back(vname(i));
    es.emplace_back(vname(i), vname((i + 1) % n));
  }
  return graph(vs, es);
}

inline atplanar::PlaneGraph triangle() {
  return drawn({{"x", 0, 0}, {"y", 1, 0}, {"z", 0, 1}}, {{"x", "y"}, {"y", "z"}, {"z", "x"}}, {"x", "y", "z"});
}

// Boundary x-y-u-v with chord yv.
inline atplanar::PlaneGraph quad_with_chord() {
  return drawn({{"x", 0, 0}, {"y", 1, 0}, {"u", 1, 1}, {"v", 0, 1}},
               {{"x", "y"}, {"y", "u"}, {"u", "v"}, {"v", "x"}, {"y", "v"}}, {"x", "y", "u", "v"});
}

inline atplanar::PlaneGraph quad() {
  return drawn({{"x", 0, 0}, {"y", 1, 0}, {"u", 1, 1}, {"v", 0, 1}},
               {{"x", "y"}, {"y", "u"}, {"u", "v"}, {"v", "x"}}, {"x", "y", "u", "v"});
}

// Rim r1..r5 counter-clockwise round hub h.
inline atplanar::PlaneGraph wheel5() {
  std::vector<Point> pts{{"h", 0, 0}};
  NamePairs es;
  std::vector<std::string> rim;
  for (int i = 0; i < 5; ++i) {
    double t = 2 * M_PI * i / 5;
    std::string r = "r" + std::to_string(i + 1);
    pts.push_back({r, std::cos(t), std::sin(t)});
    rim.push_back(r);
    es.emplace_back("h", r);
    es.emplace_back(r, "r" + std::to_string((i + 1) % 5 + 1));
  }
  return drawn(pts, es, rim);
}

// Square x-y-w-z with hubs h1 (near zx) and h2; z sees both hubs.
inline atplanar::PlaneGraph double_wheel() {
  return drawn({{"x", 0, 0}, {"y", 4, 0}, {"w", 4, 4}, {"z", 0, 4}, {"h1", 1, 2}, {"h2", 3, 2}},
               {{"x", "y"},
                {"y", "w"},
                {"w", "z"},
                {"z", "x"},
                {"h1", "h2"},
                {"h1", "x"},
                {"h1", "z"},
                {"h2", "x"},
                {"h2", "y"},
                {"h2", "w"},
                {"h2", "z"}},
               {"x", "y", "w", "z"});
}

inline atplanar::PlaneGraph k4_plane() {
  return drawn({{"a", 0, 0}, {"b", 4, 0}, {"c", 2, 4}, {"d", 2, 1}},
               {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}}, {"a", "b", "c"});
}

}  // namespace fixtures
