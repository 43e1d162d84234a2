#include <array>
#include <map>
#include <string>

#include "atplanar/error.hpp"
#include "atplanar/testkit/testkit.hpp"

namespace atplanar::testkit {

namespace {

std::string label(int k, int width) {
  std::string digits = std::to_string(k);
  return "v" + std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(digits.size()))), '0') + digits;
}

}  // namespace

PlaneGraph random_near_triangulation(int n, int boundary_len, Seed seed) {
  if (n < 3 || boundary_len < 3 || boundary_len > n)
    throw Error(ErrorCode::BadParameters, "need n >= 3 and 3 <= boundary_len <= n");
  Rng rng(seed);
  using Face = std::array<int, 3>;
  std::vector<Face> faces;

  // Interior faces run against the outer cycle 0, 1, ..., b-1.
  std::vector<int> poly;
  for (int i = boundary_len - 1; i >= 0; --i) poly.push_back(i);
  while (poly.size() > 3) {
    std::size_t m = poly.size();
    std::size_t i = rng.below(m);
    faces.push_back({poly[(i + m - 1) % m], poly[i], poly[(i + 1) % m]});
    poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
  }
  faces.push_back({poly[0], poly[1], poly[2]});

  for (int s = boundary_len; s < n; ++s) {
    std::size_t f = rng.below(faces.size());
    auto [p, q, r] = faces[f];
    faces[f] = {p, q, s};
    faces.push_back({q, r, s});
    faces.push_back({r, p, s});
  }

  // The dart after u->v in a face is v->succ_v(u).
  std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
  for (const Face& f : faces)
    for (std::size_t i = 0; i < 3; ++i) succ[static_cast<std::size_t>(f[(i + 1) % 3])][f[i]] = f[(i + 2) % 3];
  for (int i = 0; i < boundary_len; ++i)
    succ[static_cast<std::size_t>((i + 1) % boundary_len)][i] = (i + 2) % boundary_len;

  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  rng.shuffle(perm);
  const int width = std::max(3, static_cast<int>(std::to_string(n - 1).size()));
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = label(perm[static_cast<std::size_t>(i)], width);

  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, std::vector<std::string>> rotation;
  for (int v = 0; v < n; ++v) {
    const auto& sv = succ[static_cast<std::size_t>(v)];
    auto& rot = rotation[names[static_cast<std::size_t>(v)]];
    int start = sv.begin()->first;
    int w = start;
    do {
      rot.push_back(names[static_cast<std::size_t>(w)]);
      if (v < w) edges.emplace_back(names[static_cast<std::size_t>(v)], names[static_cast<std::size_t>(w)]);
      w = sv.at(w);
    } while (w != start);
  }
  std::vector<std::string> outer;
  for (int i = 0; i < boundary_len; ++i) outer.push_back(names[static_cast<std::size_t>(i)]);
  return build_plane_graph(names, edges, rotation, outer);
}

Graph random_graph(int n, double edge_probability, Seed seed) {
  if (n < 1 || !(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw Error(ErrorCode::BadParameters, "need n >= 1 and a probability in [0, 1]");
  Rng rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < edge_probability) edges.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(j)]);
  return Graph(names, edges);
}

Orientation random_orientation(const Graph& g, Rng& rng) {
  std::vector<Arc> arcs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    arcs.push_back(rng.bernoulli(0.5) ? Arc{ed.u, ed.v, e} : Arc{ed.v, ed.u, e});
  }
  return Orientation(g, std::move(arcs));
}

}  // namespace atplanar::testkit
