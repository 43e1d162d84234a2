#include "atplanar/plane_graph.hpp"

#include <algorithm>
#include <set>

#include "atplanar/error.hpp"

namespace atplanar {

namespace {

// Cyclic shift that makes the sequence lexicographically least.
FacialWalk least_rotation(const FacialWalk& walk) {
  FacialWalk best = walk;
  FacialWalk cur = walk;
  for (std::size_t i = 1; i < walk.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<int> component_labels(const Graph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

PlaneGraph::PlaneGraph(Graph graph, std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer_face)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  const int n = graph_.vertex_count();
  if (static_cast<int>(rotation_.size()) != n)
    throw Error(ErrorCode::RotationMismatch, "rotation system must list every vertex");
  rotation_pos_.assign(static_cast<std::size_t>(graph_.edge_count()), {-1, -1});
  for (Vertex v = 0; v < n; ++v) {
    auto& rot = rotation_[static_cast<std::size_t>(v)];
    if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    std::vector<Vertex> sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    auto nbrs = graph_.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nbrs.begin(), nbrs.end()))
      throw Error(ErrorCode::RotationMismatch,
                  "rotation at '" + graph_.name(v) + "' is not a permutation of its neighbours");
    for (std::size_t i = 0; i < rot.size(); ++i) {
      EdgeId e = *graph_.edge_id(v, rot[i]);
      rotation_pos_[static_cast<std::size_t>(e)][graph_.edge(e).u == v ? 0 : 1] = static_cast<int>(i);
    }
  }

  faces_ = trace_faces(*this);

  // Euler's formula per component; isolated vertices trivially satisfy it.
  auto label = component_labels(graph_);
  int comps = 0;
  for (int l : label) comps = std::max(comps, l + 1);
  std::vector<long> vcount(static_cast<std::size_t>(comps)), ecount(static_cast<std::size_t>(comps)),
      fcount(static_cast<std::size_t>(comps));
  for (Vertex v = 0; v < n; ++v) ++vcount[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
  for (const Edge& e : graph_.edges()) ++ecount[static_cast<std::size_t>(label[static_cast<std::size_t>(e.u)])];
  for (const auto& f : faces_) ++fcount[static_cast<std::size_t>(label[static_cast<std::size_t>(f.front())])];
  for (int c = 0; c < comps; ++c) {
    if (ecount[static_cast<std::size_t>(c)] == 0) continue;
    long chi = vcount[static_cast<std::size_t>(c)] - ecount[static_cast<std::size_t>(c)] + fcount[static_cast<std::size_t>(c)];
    if (chi != 2)
      throw Error(ErrorCode::EulerViolation,
                  "face trace gives V - E + F = " + std::to_string(chi) + " on a component (expected 2)");
  }

  on_outer_.assign(static_cast<std::size_t>(n), 0);
  if (graph_.edge_count() == 0) {
    if (outer_face.size() > 1)
      throw Error(ErrorCode::InvalidEmbedding, "outer face of an edgeless graph has at most one vertex");
    outer_ = outer_face;
    for (Vertex v : outer_) on_outer_[static_cast<std::size_t>(v)] = 1;
    return;
  }
  if (outer_face.empty()) throw Error(ErrorCode::InvalidEmbedding, "outer face must be designated");

  FacialWalk wanted = least_rotation(outer_face);
  FacialWalk reversed(outer_face.rbegin(), outer_face.rend());
  reversed = least_rotation(reversed);
  for (int pass = 0; pass < 2 && outer_index_ < 0; ++pass) {
    const FacialWalk& target = pass == 0 ? wanted : reversed;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (faces_[i].size() == target.size() && least_rotation(faces_[i]) == target) {
        outer_index_ = static_cast<int>(i);
        break;
      }
    }
  }
  if (outer_index_ < 0) throw Error(ErrorCode::InvalidEmbedding, "outer face is not a traced face");
  outer_ = least_rotation(faces_[static_cast<std::size_t>(outer_index_)]);
  for (Vertex v : outer_) on_outer_[static_cast<std::size_t>(v)] = 1;
}

int PlaneGraph::rotation_index(Vertex v, Vertex u) const {
  auto e = graph_.edge_id(v, u);
  if (!e) throw Error(ErrorCode::PreconditionViolated, graph_.name(v) + " and " + graph_.name(u) + " are not adjacent");
  return rotation_pos_[static_cast<std::size_t>(*e)][graph_.edge(*e).u == v ? 0 : 1];
}

Vertex PlaneGraph::successor(Vertex v, Vertex u) const {
  const auto& rot = rotation_[static_cast<std::size_t>(v)];
  auto i = static_cast<std::size_t>(rotation_index(v, u));
  return rot[(i + 1) % rot.size()];
}

Vertex PlaneGraph::predecessor(Vertex v, Vertex u) const {
  const auto& rot = rotation_[static_cast<std::size_t>(v)];
  auto i = static_cast<std::size_t>(rotation_index(v, u));
  return rot[(i + rot.size() - 1) % rot.size()];
}

PlaneGraph build_plane_graph(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::map<std::string, std::vector<std::string>>& rotation,
                             const std::vector<std::string>& outer_face) {
  Graph g(std::move(vertices), edges);
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& [name, nbrs] : rotation) {
    Vertex v = g.vertex(name);
    for (const auto& w : nbrs) rot[static_cast<std::size_t>(v)].push_back(g.vertex(w));
  }
  std::vector<Vertex> outer;
  for (const auto& name : outer_face) outer.push_back(g.vertex(name));
  return PlaneGraph(std::move(g), std::move(rot), std::move(outer));
}

std::vector<FacialWalk> trace_faces(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  // Dart (v, i) runs from v to rotation(v)[i].
  std::vector<std::size_t> offset(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + pg.rotation(v).size();
  std::vector<char> used(offset.back(), 0);
  std::vector<FacialWalk> faces;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t i = 0; i < pg.rotation(s).size(); ++i) {
      if (used[offset[static_cast<std::size_t>(s)] + i]) continue;
      FacialWalk walk;
      Vertex v = s;
      std::size_t idx = i;
      while (!used[offset[static_cast<std::size_t>(v)] + idx]) {
        used[offset[static_cast<std::size_t>(v)] + idx] = 1;
        walk.push_back(v);
        Vertex w = pg.rotation(v)[idx];
        auto rot_w = pg.rotation(w);
        idx = (static_cast<std::size_t>(pg.rotation_index(w, v)) + 1) % rot_w.size();
        v = w;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

VerificationReport validate_near_triangulation(const PlaneGraph& pg) {
  VerificationReport report("near-triangulation");
  const Graph& g = pg.graph();
  if (!g.connected()) {
    report.fail("graph is not connected");
    return report;
  }
  const auto& outer = pg.outer_face();
  std::set<Vertex> distinct(outer.begin(), outer.end());
  if (outer.size() < 3 || distinct.size() != outer.size()) {
    report.fail("outer face is not a simple cycle");
    return report;
  }
  for (std::size_t i = 0; i < pg.faces().size(); ++i) {
    ++report.cases_examined;
    if (static_cast<int>(i) == pg.outer_face_index()) continue;
    const auto& f = pg.faces()[i];
    if (f.size() != 3) {
      std::string walk;
      for (Vertex v : f) walk += (walk.empty() ? "" : ",") + g.name(v);
      report.fail("interior face of length " + std::to_string(f.size()) + ": " + walk);
      return report;
    }
  }
  return report;
}

namespace {

void require_near_triangulation(const PlaneGraph& pg) {
  auto report = validate_near_triangulation(pg);
  if (!report) throw Error(ErrorCode::NotNearTriangulation, report.counterexample);
}

bool boundary_edge(const PlaneGraph& pg, Vertex a, Vertex b) {
  const auto& c = pg.outer_face();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex p = c[i];
    Vertex q = c[(i + 1) % c.size()];
    if ((p == a && q == b) || (p == b && q == a)) return true;
  }
  return false;
}

}  // namespace

std::optional<Edge> find_chord(const PlaneGraph& pg) {
  require_near_triangulation(pg);
  for (const Edge& e : pg.graph().edges())
    if (pg.on_outer_face(e.u) && pg.on_outer_face(e.v) && !boundary_edge(pg, e.u, e.v)) return e;
  return std::nullopt;
}

EarPath ear_path(const PlaneGraph& pg, Vertex x, Vertex y) {
  require_near_triangulation(pg);
  if (pg.vertex_count() <= 3) throw Error(ErrorCode::PreconditionViolated, "ear path needs more than three vertices");
  if (!boundary_edge(pg, x, y)) throw Error(ErrorCode::HandleNotOnBoundary, "xy is not a boundary edge");
  if (find_chord(pg)) throw Error(ErrorCode::ChordPresent, "outer cycle has a chord");

  const auto& c = pg.outer_face();
  const std::size_t len = c.size();
  auto at = [&](std::size_t i) { return c[i % len]; };
  std::size_t ix = static_cast<std::size_t>(std::find(c.begin(), c.end(), x) - c.begin());
  bool y_follows = at(ix + 1) == y;
  std::size_t iz = y_follows ? ix + len - 1 : ix + 1;
  Vertex z = at(iz);
  Vertex z_next = at(iz + 1);
  Vertex z_prev = at(iz + len - 1);
  Vertex w = z_next == x ? z_prev : z_next;

  // At a boundary vertex the successor range from its traced-next to its
  // traced-previous neighbour covers the whole rotation.
  std::vector<Vertex> range;
  Vertex cur = z_next;
  range.push_back(cur);
  while (cur != z_prev) {
    cur = pg.successor(z, cur);
    range.push_back(cur);
  }
  if (range.front() != x) std::reverse(range.begin(), range.end());
  return EarPath{z, w, std::move(range)};
}

}  // namespace atplanar
