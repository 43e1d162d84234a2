#include "atplanar/orientation.hpp"

#include <algorithm>

#include "atplanar/error.hpp"

namespace atplanar {

Orientation::Orientation(const Graph& host, std::vector<Arc> arcs)
    : vertex_count_(host.vertex_count()),
      arcs_(std::move(arcs)),
      out_(static_cast<std::size_t>(host.vertex_count()), 0),
      in_(static_cast<std::size_t>(host.vertex_count()), 0) {
  std::vector<char> seen(static_cast<std::size_t>(host.edge_count()), 0);
  for (Arc& a : arcs_) {
    if (a.tail < 0 || a.head < 0 || a.tail >= vertex_count_ || a.head >= vertex_count_)
      throw Error(ErrorCode::InvalidArc, "arc endpoint out of range");
    auto e = host.edge_id(a.tail, a.head);
    if (!e) throw Error(ErrorCode::InvalidArc, "arc " + host.name(a.tail) + "->" + host.name(a.head) + " is not an edge");
    if (seen[static_cast<std::size_t>(*e)])
      throw Error(ErrorCode::InvalidArc, "edge " + host.name(a.tail) + "-" + host.name(a.head) + " oriented twice");
    seen[static_cast<std::size_t>(*e)] = 1;
    a.edge = *e;
    ++out_[static_cast<std::size_t>(a.tail)];
    ++in_[static_cast<std::size_t>(a.head)];
  }
}

int Orientation::max_out_degree() const {
  return out_.empty() ? 0 : *std::max_element(out_.begin(), out_.end());
}

bool Orientation::acyclic() const {
  std::vector<std::vector<Vertex>> succ(static_cast<std::size_t>(vertex_count_));
  std::vector<int> indeg = in_;
  for (const Arc& a : arcs_) succ[static_cast<std::size_t>(a.tail)].push_back(a.head);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < vertex_count_; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : succ[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return removed == vertex_count_;
}

Orientation orientation_from_mask(const Graph& host, unsigned long long mask) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(host.edge_count()));
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    const Edge& ed = host.edge(e);
    bool flip = e < 64 && ((mask >> e) & 1ULL);
    arcs.push_back(flip ? Arc{ed.v, ed.u, e} : Arc{ed.u, ed.v, e});
  }
  return Orientation(host, std::move(arcs));
}

}  // namespace atplanar
