#include "atplanar/decomposer.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "atplanar/error.hpp"

namespace atplanar {

namespace {

// Each pending subproblem is a region of the input embedding bounded by a
// cycle. A region is stored only as its boundary cycle, kept in the traced
// direction of the outer face; its edges at a boundary vertex v are exactly
// the rotation entries from next(v) round to prev(v). Regions created by a
// chord split share the two chord endpoints, so boundary nodes are keyed by
// (region, vertex).
class RegionEngine {
 public:
  RegionEngine(const PlaneGraph& pg, Vertex x, Vertex y)
      : pg_(pg),
        g_(pg.graph()),
        handle_x_(x),
        handle_y_(y),
        assigned_(static_cast<std::size_t>(g_.edge_count()), 0),
        chord_owner_(static_cast<std::size_t>(g_.edge_count()), -1),
        chord_edges_(static_cast<std::size_t>(g_.vertex_count())) {
    const auto& outer = pg.outer_face();
    regions_.push_back(Region{x, y, false, static_cast<int>(outer.size()), {}, -1, 0});
    nodes_.reserve(static_cast<std::size_t>(2 * g_.vertex_count()));
    where_.reserve(static_cast<std::size_t>(2 * g_.vertex_count()));
    int first = -1;
    int prev = -1;
    for (Vertex v : outer) {
      int id = new_node(0, v);
      if (prev >= 0) link(prev, id);
      if (first < 0) first = id;
      prev = id;
    }
    link(prev, first);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      int nu = node_of(0, ed.u);
      if (nu < 0 || node_of(0, ed.v) < 0) continue;
      if (vertex_at(nodes_[nu].next) == ed.v || vertex_at(nodes_[nu].prev) == ed.v) continue;
      add_chord(0, e);
    }
  }

  Decomposition run() {
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int r = stack.back();
      stack.pop_back();
      if (is_base(r)) {
        base_case(r);
      } else if (!regions_[static_cast<std::size_t>(r)].chords.empty()) {
        auto [keep, split] = chord_case(r);
        stack.push_back(split);
        stack.push_back(keep);
      } else {
        ear_case(r);
        stack.push_back(r);
      }
    }
    Decomposition d;
    d.handle_x = handle_x_;
    d.handle_y = handle_y_;
    for (EdgeId e = 0; e < g_.edge_count(); ++e)
      if (assigned_[static_cast<std::size_t>(e)] == kForest) d.forest.push_back(e);
    d.orientation = Orientation(g_, std::move(arcs_));
    d.trace = std::move(trace_);
    return d;
  }

 private:
  static constexpr std::uint8_t kForest = 1;
  static constexpr std::uint8_t kArc = 2;

  struct Node {
    Vertex v;
    int next;
    int prev;
  };

  struct Region {
    Vertex x;
    Vertex y;
    bool exclude_handle;  // handle is a chord owned by the region it was split from
    int size;
    std::set<std::pair<Vertex, Vertex>> chords;
    int trace_parent;
    int trace_slot;
  };

  static std::uint64_t key(int region, Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(region)) << 32) | static_cast<std::uint32_t>(v);
  }

  int new_node(int region, Vertex v) {
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back({v, id, id});
    where_[key(region, v)] = id;
    return id;
  }

  void link(int a, int b) {
    nodes_[static_cast<std::size_t>(a)].next = b;
    nodes_[static_cast<std::size_t>(b)].prev = a;
  }

  int node_of(int region, Vertex v) const {
    auto it = where_.find(key(region, v));
    return it == where_.end() ? -1 : it->second;
  }

  Vertex vertex_at(int node) const { return nodes_[static_cast<std::size_t>(node)].v; }
  Vertex next_vertex(int node) const { return vertex_at(nodes_[static_cast<std::size_t>(node)].next); }
  Vertex prev_vertex(int node) const { return vertex_at(nodes_[static_cast<std::size_t>(node)].prev); }

  // Region neighbours of a boundary vertex, in rotation order from its
  // boundary successor to its boundary predecessor.
  std::vector<Vertex> region_neighbors(int node) const {
    Vertex v = vertex_at(node);
    Vertex last = prev_vertex(node);
    std::vector<Vertex> out{next_vertex(node)};
    while (out.back() != last) out.push_back(pg_.successor(v, out.back()));
    return out;
  }

  EdgeId edge(Vertex a, Vertex b) const {
    auto e = g_.edge_id(a, b);
    if (!e) throw Error(ErrorCode::InvalidEmbedding, "expected edge " + g_.name(a) + "-" + g_.name(b));
    return *e;
  }

  void assign(Vertex a, Vertex b, std::uint8_t kind) {
    EdgeId e = edge(a, b);
    auto& slot = assigned_[static_cast<std::size_t>(e)];
    if (slot != 0)
      throw Error(ErrorCode::InvalidEmbedding, "edge " + g_.name(a) + "-" + g_.name(b) + " assigned twice");
    slot = kind;
  }

  void add_forest(Vertex a, Vertex b) { assign(a, b, kForest); }

  void add_arc(Vertex tail, Vertex head) {
    assign(tail, head, kArc);
    arcs_.push_back({tail, head, edge(tail, head)});
  }

  void add_chord(int region, EdgeId e) {
    if (chord_owner_[static_cast<std::size_t>(e)] == region) return;
    const Edge& ed = g_.edge(e);
    chord_owner_[static_cast<std::size_t>(e)] = region;
    regions_[static_cast<std::size_t>(region)].chords.insert({ed.u, ed.v});
    chord_edges_[static_cast<std::size_t>(ed.u)].push_back(e);
    chord_edges_[static_cast<std::size_t>(ed.v)].push_back(e);
  }

  int open_trace(int region, TraceKind kind, std::array<Vertex, 3> vs, std::size_t children) {
    int id = static_cast<int>(trace_.nodes.size());
    trace_.nodes.push_back({kind, vs, std::vector<int>(children, -1)});
    const Region& reg = regions_[static_cast<std::size_t>(region)];
    if (reg.trace_parent < 0) {
      trace_.root = id;
    } else {
      trace_.nodes[static_cast<std::size_t>(reg.trace_parent)].children[static_cast<std::size_t>(reg.trace_slot)] = id;
    }
    return id;
  }

  bool is_base(int r) const {
    const Region& reg = regions_[static_cast<std::size_t>(r)];
    if (reg.size != 3) return false;
    int nx = node_of(r, reg.x);
    // a bare triangle: x has no neighbour strictly inside the region
    return pg_.successor(reg.x, next_vertex(nx)) == prev_vertex(nx);
  }

  void base_case(int r) {
    const Region& reg = regions_[static_cast<std::size_t>(r)];
    int nx = node_of(r, reg.x);
    Vertex t = next_vertex(nx) == reg.y ? prev_vertex(nx) : next_vertex(nx);
    open_trace(r, TraceKind::Base, {reg.x, reg.y, t}, 0);
    if (!reg.exclude_handle) add_forest(reg.x, reg.y);
    add_forest(reg.y, t);
    add_arc(t, reg.x);
  }

  std::pair<int, int> chord_case(int r) {
    auto [cu, cv] = *regions_[static_cast<std::size_t>(r)].chords.begin();
    regions_[static_cast<std::size_t>(r)].chords.erase(regions_[static_cast<std::size_t>(r)].chords.begin());
    chord_owner_[static_cast<std::size_t>(edge(cu, cv))] = -2;

    int nu = node_of(r, cu);
    int nv = node_of(r, cv);
    // Side A runs cu -> ... -> cv along next, side B cv -> ... -> cu. Walk
    // both at once so only the shorter side is relabelled.
    std::vector<int> side_a, side_b;
    int a = nodes_[static_cast<std::size_t>(nu)].next;
    int b = nodes_[static_cast<std::size_t>(nv)].next;
    bool a_smaller;
    while (true) {
      if (a == nv) {
        a_smaller = true;
        break;
      }
      side_a.push_back(a);
      a = nodes_[static_cast<std::size_t>(a)].next;
      if (b == nu) {
        a_smaller = false;
        break;
      }
      side_b.push_back(b);
      b = nodes_[static_cast<std::size_t>(b)].next;
    }
    const std::vector<int>& moved = a_smaller ? side_a : side_b;

    int r2 = static_cast<int>(regions_.size());
    regions_.push_back(Region{-1, -1, false, static_cast<int>(moved.size()) + 2, {}, -1, 0});
    regions_[static_cast<std::size_t>(r)].size -= static_cast<int>(moved.size());

    int nu2 = new_node(r2, cu);
    int nv2 = new_node(r2, cv);
    if (a_smaller) {
      link(nu2, moved.front());
      link(moved.back(), nv2);
      link(nv2, nu2);
      link(nu, nv);
    } else {
      link(nv2, moved.front());
      link(moved.back(), nu2);
      link(nu2, nv2);
      link(nv, nu);
    }
    for (int node : moved) {
      Vertex s = vertex_at(node);
      where_.erase(key(r, s));
      where_[key(r2, s)] = node;
    }
    for (int node : moved) {
      Vertex s = vertex_at(node);
      for (EdgeId e : chord_edges_[static_cast<std::size_t>(s)]) {
        if (chord_owner_[static_cast<std::size_t>(e)] != r) continue;
        const Edge& ed = g_.edge(e);
        regions_[static_cast<std::size_t>(r)].chords.erase({ed.u, ed.v});
        regions_[static_cast<std::size_t>(r2)].chords.insert({ed.u, ed.v});
        chord_owner_[static_cast<std::size_t>(e)] = r2;
      }
    }

    Region& old = regions_[static_cast<std::size_t>(r)];
    Vertex probe = (old.x != cu && old.x != cv) ? old.x : old.y;
    int keep = node_of(r2, probe) >= 0 ? r2 : r;
    int split = keep == r ? r2 : r;
    Region& kept = regions_[static_cast<std::size_t>(keep)];
    Region& off = regions_[static_cast<std::size_t>(split)];
    if (keep == r2) {
      kept.x = old.x;
      kept.y = old.y;
      kept.exclude_handle = old.exclude_handle;
    }
    kept.trace_parent = old.trace_parent;
    kept.trace_slot = old.trace_slot;

    // The split-off handle is the chord as traversed along the kept side's
    // boundary in the direction of the current handle.
    bool chord_forward = next_vertex(node_of(keep, cu)) == cv;
    Vertex s0 = chord_forward ? cu : cv;
    Vertex s1 = chord_forward ? cv : cu;
    bool handle_forward = next_vertex(node_of(keep, kept.x)) == kept.y;
    off.x = handle_forward ? s0 : s1;
    off.y = handle_forward ? s1 : s0;
    off.exclude_handle = true;

    int id = open_trace(keep, TraceKind::Chord, {off.x, off.y, -1}, 2);
    kept.trace_parent = id;
    kept.trace_slot = 0;
    off.trace_parent = id;
    off.trace_slot = 1;
    return {keep, split};
  }

  void ear_case(int r) {
    Region& reg = regions_[static_cast<std::size_t>(r)];
    int nx = node_of(r, reg.x);
    int nz = next_vertex(nx) == reg.y ? nodes_[static_cast<std::size_t>(nx)].prev : nodes_[static_cast<std::size_t>(nx)].next;
    Vertex z = vertex_at(nz);
    int np = nodes_[static_cast<std::size_t>(nz)].prev;
    int nq = nodes_[static_cast<std::size_t>(nz)].next;
    Vertex p = vertex_at(np);
    Vertex q = vertex_at(nq);
    std::vector<Vertex> around = region_neighbors(nz);  // q, l1, ..., lk, p
    if (around.size() < 3)
      throw Error(ErrorCode::InvalidEmbedding, "ear vertex " + g_.name(z) + " has no interior neighbour");
    Vertex w = reg.x == p ? q : p;

    open_trace(r, TraceKind::Ear, {z, w, -1}, 1);
    add_forest(z, w);
    add_arc(z, reg.x);
    for (std::size_t i = 1; i + 1 < around.size(); ++i) add_arc(around[i], z);

    where_.erase(key(r, z));
    int prev = np;
    std::vector<int> fresh;
    for (std::size_t i = around.size() - 2; i >= 1; --i) {
      Vertex l = around[i];
      if (node_of(r, l) >= 0)
        throw Error(ErrorCode::InvalidEmbedding, "chordless region has boundary vertex " + g_.name(l) + " next to the ear");
      int id = new_node(r, l);
      link(prev, id);
      prev = id;
      fresh.push_back(id);
    }
    link(prev, nq);
    reg.size += static_cast<int>(fresh.size()) - 1;
    reg.trace_parent = static_cast<int>(trace_.nodes.size()) - 1;
    reg.trace_slot = 0;

    for (int node : fresh) {
      Vertex l = vertex_at(node);
      auto nbrs = region_neighbors(node);
      for (std::size_t i = 1; i + 1 < nbrs.size(); ++i)
        if (node_of(r, nbrs[i]) >= 0) add_chord(r, edge(l, nbrs[i]));
    }
  }

  const PlaneGraph& pg_;
  const Graph& g_;
  Vertex handle_x_;
  Vertex handle_y_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, int> where_;
  std::vector<Region> regions_;
  std::vector<std::uint8_t> assigned_;
  std::vector<int> chord_owner_;
  std::vector<std::vector<EdgeId>> chord_edges_;
  std::vector<Arc> arcs_;
  DecompositionTrace trace_;
};

bool boundary_pair(const PlaneGraph& pg, Vertex a, Vertex b) {
  const auto& c = pg.outer_face();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex p = c[i];
    Vertex q = c[(i + 1) % c.size()];
    if ((p == a && q == b) || (p == b && q == a)) return true;
  }
  return false;
}

std::string edge_name(const Graph& g, EdgeId e) { return g.name(g.edge(e).u) + "-" + g.name(g.edge(e).v); }

}  // namespace

Decomposition decompose(const PlaneGraph& pg, Vertex x, Vertex y) {
  auto report = validate_near_triangulation(pg);
  if (!report) throw Error(ErrorCode::NotNearTriangulation, report.counterexample);
  if (x < 0 || y < 0 || x >= pg.vertex_count() || y >= pg.vertex_count() || !boundary_pair(pg, x, y))
    throw Error(ErrorCode::HandleNotOnBoundary, "handle is not an edge of the outer cycle");
  return RegionEngine(pg, x, y).run();
}

VerificationReport verify_decomposition(const PlaneGraph& pg, const Decomposition& d, VerifyMode mode,
                                        const EnumerationLimits& limits) {
  VerificationReport report(mode == VerifyMode::Parity ? "decomposition/parity" : "decomposition/structural");
  const Graph& g = pg.graph();
  auto name = [&](Vertex v) { return g.name(v); };

  if (d.orientation.vertex_count() != g.vertex_count()) {
    report.fail("orientation does not belong to this graph");
    return report;
  }
  if (d.handle_x < 0 || d.handle_y < 0 || d.handle_x >= g.vertex_count() || d.handle_y >= g.vertex_count() ||
      !boundary_pair(pg, d.handle_x, d.handle_y)) {
    report.fail("handle is not a boundary edge");
    return report;
  }

  std::vector<int> cover(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : d.forest) {
    if (e < 0 || e >= g.edge_count()) {
      report.fail("forest references a non-edge");
      return report;
    }
    ++cover[static_cast<std::size_t>(e)];
  }
  for (const Arc& a : d.orientation.arcs()) ++cover[static_cast<std::size_t>(a.edge)];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ++report.cases_examined;
    if (cover[static_cast<std::size_t>(e)] != 1) {
      report.fail("partition: edge " + edge_name(g, e) + " covered " + std::to_string(cover[static_cast<std::size_t>(e)]) +
                  " times");
      return report;
    }
  }

  if (!is_forest(g, d.forest)) report.fail("forest: F contains a cycle");
  auto handle = g.edge_id(d.handle_x, d.handle_y);
  if (!std::binary_search(d.forest.begin(), d.forest.end(), *handle) &&
      std::find(d.forest.begin(), d.forest.end(), *handle) == d.forest.end())
    report.fail("handle: " + name(d.handle_x) + "-" + name(d.handle_y) + " not in F");
  for (Vertex h : {d.handle_x, d.handle_y})
    if (d.orientation.out_degree(h) != 0)
      report.fail("out-degree at handle: d+(" + name(h) + ") = " + std::to_string(d.orientation.out_degree(h)));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int limit = pg.on_outer_face(v) ? 1 : 2;
    if (d.orientation.out_degree(v) > limit)
      report.fail(std::string(pg.on_outer_face(v) ? "boundary" : "interior") + " out-degree: d+(" + name(v) +
                  ") = " + std::to_string(d.orientation.out_degree(v)));
  }
  if (!d.orientation.acyclic()) report.fail("acyclic: orientation has a directed cycle");

  if (!d.trace.empty()) {
    const auto& nodes = d.trace.nodes;
    bool ok = d.trace.root >= 0 && d.trace.root < static_cast<int>(nodes.size());
    for (const TraceNode& t : nodes) {
      std::size_t want = t.kind == TraceKind::Base ? 0 : t.kind == TraceKind::Chord ? 2 : 1;
      if (t.children.size() != want) ok = false;
      for (int c : t.children)
        if (c < 0 || c >= static_cast<int>(nodes.size())) ok = false;
      if (ok && t.kind == TraceKind::Base && !is_clique(g, t.vertices)) {
        report.fail("trace: base leaf is not a triangle of G");
        break;
      }
    }
    if (!ok) report.fail("trace: malformed recursion tree");
  }

  if (mode == VerifyMode::Parity) {
    auto pc = eulerian_diff(d.orientation, limits);
    report.cases_examined += std::uint64_t{1} << d.orientation.arc_count();
    report.tally["even"] = pc.even;
    report.tally["odd"] = pc.odd;
    if (pc.diff() != 1) report.fail("parity: EE - OE = " + std::to_string(pc.diff()));
  }
  return report;
}

namespace {

// Mutable embedding used while adding edges.
struct Embedding {
  std::vector<std::vector<Vertex>> rot;
  std::vector<std::set<Vertex>> adj;
  std::vector<std::pair<Vertex, Vertex>> added;

  std::size_t index(Vertex v, Vertex u) const {
    const auto& r = rot[static_cast<std::size_t>(v)];
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), u) - r.begin());
  }

  Vertex successor(Vertex v, Vertex u) const {
    const auto& r = rot[static_cast<std::size_t>(v)];
    return r[(index(v, u) + 1) % r.size()];
  }

  bool can_join(Vertex a, Vertex b) const { return a != b && !adj[static_cast<std::size_t>(a)].count(b); }

  // Clip the corner (before -> a -> mid -> b) of a face: the new edge ab
  // closes the triangle a, mid, b and the face continues before -> a -> b.
  void clip(Vertex before, Vertex a, Vertex b, Vertex mid) {
    auto& ra = rot[static_cast<std::size_t>(a)];
    ra.insert(ra.begin() + static_cast<std::ptrdiff_t>(index(a, before) + 1), b);
    auto& rb = rot[static_cast<std::size_t>(b)];
    rb.insert(rb.begin() + static_cast<std::ptrdiff_t>(index(b, mid) + 1), a);
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
    added.emplace_back(a, b);
  }
};

bool clip_at(Embedding& emb, std::vector<Vertex>& walk, std::size_t i) {
  std::size_t n = walk.size();
  Vertex a = walk[(i + n - 1) % n];
  Vertex mid = walk[i];
  Vertex b = walk[(i + 1) % n];
  Vertex before = walk[(i + n - 2) % n];
  if (!emb.can_join(a, b)) return false;
  emb.clip(before, a, b, mid);
  walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(i));
  return true;
}

}  // namespace

PlaneGraph augment_to_near_triangulation(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "input graph is not connected");
  if (g.vertex_count() < 3) throw Error(ErrorCode::InvalidEmbedding, "fewer than three vertices");

  Embedding emb;
  emb.rot.resize(static_cast<std::size_t>(g.vertex_count()));
  emb.adj.resize(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto r = pg.rotation(v);
    emb.rot[static_cast<std::size_t>(v)].assign(r.begin(), r.end());
    emb.adj[static_cast<std::size_t>(v)].insert(r.begin(), r.end());
  }

  // Outer face: clip corners at repeated vertices until the walk is simple.
  std::vector<Vertex> outer = pg.faces()[static_cast<std::size_t>(pg.outer_face_index())];
  while (true) {
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : outer) ++seen[static_cast<std::size_t>(v)];
    bool repeated = false;
    bool clipped = false;
    for (std::size_t i = 0; i < outer.size() && !clipped; ++i) {
      if (seen[static_cast<std::size_t>(outer[i])] < 2) continue;
      repeated = true;
      clipped = clip_at(emb, outer, i);
    }
    if (!repeated) break;
    if (!clipped) throw Error(ErrorCode::InvalidEmbedding, "cannot make the outer boundary simple");
  }

  // Trace bounded faces of the current embedding; the outer face is the
  // one through the dart outer[0] -> outer[1].
  std::vector<std::vector<Vertex>> faces;
  {
    std::set<std::pair<Vertex, Vertex>> used;
    for (std::size_t i = 0; i < outer.size(); ++i) used.insert({outer[i], outer[(i + 1) % outer.size()]});
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (Vertex t : emb.rot[static_cast<std::size_t>(s)]) {
        if (used.count({s, t})) continue;
        std::vector<Vertex> walk;
        Vertex u = s, v = t;
        while (!used.count({u, v})) {
          used.insert({u, v});
          walk.push_back(u);
          Vertex w = emb.successor(v, u);
          u = v;
          v = w;
        }
        faces.push_back(std::move(walk));
      }
    }
  }

  for (auto& face : faces) {
    // start at the least vertex so the first clips fan out from it
    std::rotate(face.begin(), std::min_element(face.begin(), face.end()), face.end());
    while (face.size() > 3) {
      bool clipped = clip_at(emb, face, 1);
      for (std::size_t i = 2; i < face.size() + 1 && !clipped; ++i) clipped = clip_at(emb, face, i % face.size());
      if (!clipped) throw Error(ErrorCode::InvalidEmbedding, "cannot triangulate a face without parallel edges");
    }
  }

  std::vector<std::string> names(g.names().begin(), g.names().end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(g.name(e.u), g.name(e.v));
  for (auto [a, b] : emb.added) edges.emplace_back(g.name(a), g.name(b));
  Graph aug(names, edges);
  // same names, so vertex indices carry over
  PlaneGraph result(std::move(aug), std::move(emb.rot), outer);
  auto report = validate_near_triangulation(result);
  if (!report) throw Error(ErrorCode::InvalidEmbedding, "augmentation failed: " + report.counterexample);
  return result;
}

ForestCertificate decompose_any_planar(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "input graph is not connected");
  ForestCertificate cert;
  if (g.vertex_count() < 3) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) cert.forest.push_back(e);
    cert.orientation = Orientation(g);
    return cert;
  }
  PlaneGraph aug = augment_to_near_triangulation(pg);
  const auto& outer = aug.outer_face();
  Decomposition d = decompose(aug, outer[0], outer[1]);
  const Graph& ag = aug.graph();
  for (EdgeId e : d.forest) {
    const Edge& ed = ag.edge(e);
    if (auto orig = g.edge_id(ed.u, ed.v)) cert.forest.push_back(*orig);
  }
  std::sort(cert.forest.begin(), cert.forest.end());
  std::vector<Arc> arcs;
  for (const Arc& a : d.orientation.arcs())
    if (auto orig = g.edge_id(a.tail, a.head)) arcs.push_back({a.tail, a.head, *orig});
  cert.orientation = Orientation(g, std::move(arcs));
  return cert;
}

VerificationReport verify_forest_certificate(const Graph& g, const ForestCertificate& cert) {
  VerificationReport report("forest-certificate");
  std::vector<int> cover(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : cert.forest) {
    if (e < 0 || e >= g.edge_count()) {
      report.fail("forest references a non-edge");
      return report;
    }
    ++cover[static_cast<std::size_t>(e)];
  }
  for (const Arc& a : cert.orientation.arcs()) ++cover[static_cast<std::size_t>(a.edge)];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ++report.cases_examined;
    if (cover[static_cast<std::size_t>(e)] != 1) {
      report.fail("partition: edge " + edge_name(g, e) + " covered " + std::to_string(cover[static_cast<std::size_t>(e)]) +
                  " times");
      return report;
    }
  }
  if (!is_forest(g, cert.forest)) report.fail("forest: F contains a cycle");
  if (!cert.orientation.acyclic()) report.fail("acyclic: orientation has a directed cycle");
  if (cert.orientation.max_out_degree() > 2)
    report.fail("out-degree: maximum is " + std::to_string(cert.orientation.max_out_degree()));
  return report;
}

}  // namespace atplanar
