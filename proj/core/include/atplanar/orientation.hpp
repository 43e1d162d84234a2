#pragma once

#include <span>
#include <vector>

#include "atplanar/graph.hpp"

namespace atplanar {

struct Arc {
  Vertex tail;
  Vertex head;
  EdgeId edge;  // id of {tail, head} in the host graph

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Directions assigned to a subset of a host graph's edges. Only the host's
// vertex count is retained; callers keep the host alongside when names are
// needed.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(const Graph& host) : Orientation(host, {}) {}
  // Throws Error{InvalidArc} when an arc is not a host edge or an edge is
  // oriented twice. The `edge` field of each arc is recomputed.
  Orientation(const Graph& host, std::vector<Arc> arcs);

  int vertex_count() const { return vertex_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const { return arcs_; }

  int out_degree(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  int in_degree(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int max_out_degree() const;
  std::vector<int> out_degrees() const { return out_; }

  bool acyclic() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_;
  std::vector<int> in_;
};

// Orientation of every host edge; bit i of `mask` reverses edge i from
// low->high index to high->low.
Orientation orientation_from_mask(const Graph& host, unsigned long long mask);

}  // namespace atplanar
