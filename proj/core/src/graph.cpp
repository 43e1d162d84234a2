#include "atplanar/graph.hpp"

#include <algorithm>
#include <numeric>

#include "atplanar/error.hpp"

namespace atplanar {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int EdgeMask::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<EdgeId> EdgeMask::members() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<EdgeId>(i));
  return out;
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end())
    throw Error(ErrorCode::DuplicateVertex, "vertex '" + *dup + "' listed twice");
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    Vertex u = vertex(a);
    Vertex v = vertex(b);
    if (u == v) throw Error(ErrorCode::SelfLoop, "loop at '" + a + "'");
    edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw Error(ErrorCode::DuplicateEdge, "edge " + name(dup->u) + "-" + name(dup->v) + " listed twice");
  index_edges();
}

void Graph::index_edges() {
  adjacency_.assign(names_.size(), {});
  incident_.assign(names_.size(), {});
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> tmp(names_.size());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<std::size_t>(e)];
    tmp[static_cast<std::size_t>(ed.u)].push_back({ed.v, e});
    tmp[static_cast<std::size_t>(ed.v)].push_back({ed.u, e});
  }
  for (std::size_t v = 0; v < tmp.size(); ++v) {
    std::sort(tmp[v].begin(), tmp[v].end());
    adjacency_[v].reserve(tmp[v].size());
    incident_[v].reserve(tmp[v].size());
    for (auto [w, e] : tmp[v]) {
      adjacency_[v].push_back(w);
      incident_[v].push_back(e);
    }
  }
}

std::optional<Vertex> Graph::find_vertex(std::string_view nm) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), nm,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names_.end() || *it != nm) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex Graph::vertex(std::string_view nm) const {
  if (auto v = find_vertex(nm)) return *v;
  throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(nm) + "'");
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adjacency_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

std::optional<EdgeId> Graph::edge_id(Vertex a, Vertex b) const {
  const auto& adj = adjacency_[static_cast<std::size_t>(a)];
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return std::nullopt;
  return incident_[static_cast<std::size_t>(a)][static_cast<std::size_t>(it - adj.begin())];
}

Graph Graph::without_edges(const EdgeMask& removed) const {
  Graph out;
  out.names_ = names_;
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (!removed.contains(e)) out.edges_.push_back(edges_[static_cast<std::size_t>(e)]);
  out.index_edges();
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<std::string> keep;
  std::vector<char> in(names_.size(), 0);
  for (Vertex v : vertices) {
    if (!in[static_cast<std::size_t>(v)]) keep.push_back(name(v));
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<std::pair<std::string, std::string>> es;
  for (const Edge& e : edges_)
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) es.emplace_back(name(e.u), name(e.v));
  return Graph(std::move(keep), es);
}

int Graph::component_count() const {
  DisjointSets ds(vertex_count());
  int comps = vertex_count();
  for (const Edge& e : edges_)
    if (ds.unite(e.u, e.v)) --comps;
  return comps;
}

GraphBuilder& GraphBuilder::vertex(std::string name) {
  vertices_.push_back(std::move(name));
  return *this;
}

GraphBuilder& GraphBuilder::edge(std::string a, std::string b) {
  edges_.emplace_back(std::move(a), std::move(b));
  return *this;
}

namespace {

bool live_edge(const Graph& g, Vertex a, Vertex b, const EdgeMask* removed) {
  auto e = g.edge_id(a, b);
  return e && (!removed || !removed->contains(*e));
}

}  // namespace

bool is_clique(const Graph& g, std::span<const Vertex> vs, const EdgeMask* removed) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !live_edge(g, vs[i], vs[j], removed)) return false;
  return true;
}

namespace {

std::optional<std::array<Vertex, 4>> find_k4_impl(const Graph& g, const EdgeMask* removed) {
  std::vector<Vertex> up_a, common_ab;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    up_a.clear();
    auto na = g.neighbors(a);
    auto ea = g.incident_edges(a);
    for (std::size_t i = 0; i < na.size(); ++i)
      if (na[i] > a && (!removed || !removed->contains(ea[i]))) up_a.push_back(na[i]);
    if (up_a.size() < 3) continue;
    for (std::size_t ib = 0; ib < up_a.size(); ++ib) {
      Vertex b = up_a[ib];
      common_ab.clear();
      for (std::size_t ic = ib + 1; ic < up_a.size(); ++ic)
        if (live_edge(g, b, up_a[ic], removed)) common_ab.push_back(up_a[ic]);
      for (std::size_t ic = 0; ic < common_ab.size(); ++ic) {
        Vertex c = common_ab[ic];
        for (std::size_t id = ic + 1; id < common_ab.size(); ++id)
          if (live_edge(g, c, common_ab[id], removed)) return std::array<Vertex, 4>{a, b, c, common_ab[id]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) { return find_k4_impl(g, nullptr); }

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g, const EdgeMask& removed) {
  return find_k4_impl(g, &removed);
}

bool is_forest(const Graph& g, std::span<const EdgeId> edges) {
  DisjointSets ds(g.vertex_count());
  for (EdgeId e : edges)
    if (!ds.unite(g.edge(e).u, g.edge(e).v)) return false;
  return true;
}

}  // namespace atplanar
