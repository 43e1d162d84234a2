#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atplanar {

// Vertices are addressed by their rank in the lexicographic order of their
// names, so index order and name order coincide everywhere.
using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Per-edge membership flags, indexed by EdgeId of one particular host graph.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(int edge_count) : bits_(static_cast<std::size_t>(edge_count), 0) {}

  bool contains(EdgeId e) const { return bits_[static_cast<std::size_t>(e)] != 0; }
  void insert(EdgeId e) { bits_[static_cast<std::size_t>(e)] = 1; }
  void erase(EdgeId e) { bits_[static_cast<std::size_t>(e)] = 0; }
  int size() const { return static_cast<int>(bits_.size()); }
  int count() const;
  std::vector<EdgeId> members() const;

  friend bool operator==(const EdgeMask&, const EdgeMask&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Simple undirected graph with opaque string vertex names. Immutable after
// construction.
class Graph {
 public:
  Graph() = default;

  // Throws Error{DuplicateVertex, DuplicateEdge, SelfLoop, UnknownVertex}.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& name(Vertex v) const { return names_[static_cast<std::size_t>(v)]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<Vertex> find_vertex(std::string_view name) const;
  // Throws Error{UnknownVertex}.
  Vertex vertex(std::string_view name) const;

  // Sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  // Edge ids incident to v, in the same order as neighbors(v).
  std::span<const EdgeId> incident_edges(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }

  // Same vertex set, edges outside `removed` kept (ids are renumbered).
  Graph without_edges(const EdgeMask& removed) const;
  Graph induced(std::span<const Vertex> vertices) const;

  int component_count() const;
  bool connected() const { return vertex_count() > 0 && component_count() == 1; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  void index_edges();

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Accumulates named vertices and edges; gadget builders use this to emit
// graphs without caring about the final index order.
class GraphBuilder {
 public:
  GraphBuilder& vertex(std::string name);
  GraphBuilder& edge(std::string a, std::string b);
  Graph build() const { return Graph(vertices_, edges_); }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

// Lexicographically first 4-clique (by vertex index tuple), ignoring edges in
// `removed` when given.
std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);
std::optional<std::array<Vertex, 4>> find_k4(const Graph& g, const EdgeMask& removed);

// True iff every pair of the listed vertices is joined by an edge outside
// `removed`.
bool is_clique(const Graph& g, std::span<const Vertex> vertices, const EdgeMask* removed = nullptr);

// Union-find based forest test over the given edge ids.
bool is_forest(const Graph& g, std::span<const EdgeId> edges);

}  // namespace atplanar
