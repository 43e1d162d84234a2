#include "atplanar/star_forest.hpp"

#include <algorithm>

#include "atplanar/error.hpp"

namespace atplanar {

StarForest::StarForest(const Graph& g, std::vector<EdgeId> edges, std::vector<Vertex> centers)
    : edges_(std::move(edges)), centers_(std::move(centers)) {
  std::sort(edges_.begin(), edges_.end());
  std::sort(centers_.begin(), centers_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(ErrorCode::InvalidStarForest, "edge listed twice");
  if (std::adjacent_find(centers_.begin(), centers_.end()) != centers_.end())
    throw Error(ErrorCode::InvalidStarForest, "centre listed twice");
  std::vector<int> leaf_edges(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> center_edges(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges_) {
    if (e < 0 || e >= g.edge_count()) throw Error(ErrorCode::InvalidStarForest, "not an edge of the graph");
    const Edge& ed = g.edge(e);
    bool cu = is_center(ed.u);
    bool cv = is_center(ed.v);
    std::string label = g.name(ed.u) + "-" + g.name(ed.v);
    if (cu && cv) throw Error(ErrorCode::InvalidStarForest, "edge " + label + " joins two centres");
    if (!cu && !cv) throw Error(ErrorCode::InvalidStarForest, "edge " + label + " has no centre");
    Vertex leaf = cu ? ed.v : ed.u;
    ++center_edges[static_cast<std::size_t>(cu ? ed.u : ed.v)];
    if (++leaf_edges[static_cast<std::size_t>(leaf)] > 1)
      throw Error(ErrorCode::InvalidStarForest, "leaf " + g.name(leaf) + " is in two stars");
  }
  for (Vertex c : centers_)
    if (center_edges[static_cast<std::size_t>(c)] == 0)
      throw Error(ErrorCode::InvalidStarForest, "centre " + g.name(c) + " has no leaves");
}

StarForest StarForest::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) throw Error(ErrorCode::InvalidStarForest, "not an edge of the graph");
    ++degree[static_cast<std::size_t>(g.edge(e).u)];
    ++degree[static_cast<std::size_t>(g.edge(e).v)];
  }
  std::vector<Vertex> centers;
  for (EdgeId e : edges) {
    const Edge& ed = g.edge(e);
    int du = degree[static_cast<std::size_t>(ed.u)];
    int dv = degree[static_cast<std::size_t>(ed.v)];
    if (du > 1 && dv > 1)
      throw Error(ErrorCode::InvalidStarForest,
                  "component through " + g.name(ed.u) + "-" + g.name(ed.v) + " is not a star");
    centers.push_back(dv > 1 ? ed.v : ed.u);
  }
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  return StarForest(g, std::move(edges), std::move(centers));
}

EdgeMask StarForest::mask(const Graph& g) const {
  EdgeMask m(g.edge_count());
  for (EdgeId e : edges_) m.insert(e);
  return m;
}

}  // namespace atplanar
