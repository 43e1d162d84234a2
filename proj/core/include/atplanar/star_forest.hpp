#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "atplanar/graph.hpp"

namespace atplanar {

// Edge set whose components are stars, each with a designated centre. Every
// edge joins a centre to a leaf; a leaf belongs to exactly one star.
class StarForest {
 public:
  StarForest() = default;

  // Throws Error{InvalidStarForest}.
  StarForest(const Graph& g, std::vector<EdgeId> edges, std::vector<Vertex> centers);

  // Centres inferred per component: the vertex of degree > 1, or the lower
  // endpoint of a single edge. Throws Error{InvalidStarForest} when a
  // component is not a star.
  static StarForest from_edges(const Graph& g, std::vector<EdgeId> edges);

  std::span<const EdgeId> edges() const { return edges_; }
  std::span<const Vertex> centers() const { return centers_; }
  bool is_center(Vertex v) const { return std::binary_search(centers_.begin(), centers_.end(), v); }
  EdgeMask mask(const Graph& g) const;

 private:
  std::vector<EdgeId> edges_;   // sorted
  std::vector<Vertex> centers_;  // sorted
};

}  // namespace atplanar
