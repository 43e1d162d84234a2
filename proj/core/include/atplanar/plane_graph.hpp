#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "atplanar/graph.hpp"
#include "atplanar/report.hpp"

namespace atplanar {

// A closed walk: dart i runs from vertices[i] to vertices[(i + 1) % size].
using FacialWalk = std::vector<Vertex>;

// Graph plus rotation system and a caller-designated outer face.
//
// Faces follow the rule: the dart after u->v is v->w where w is the entry
// following u in rotation(v), cyclically. With counter-clockwise rotations
// this traces bounded faces clockwise and the outer face counter-clockwise.
// The outer face may be supplied in either direction; it is stored in traced
// direction, rotated to its lexicographically least form. Each rotation is
// stored starting from its smallest neighbour.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // Throws Error{RotationMismatch, EulerViolation, InvalidEmbedding}.
  PlaneGraph(Graph graph, std::vector<std::vector<Vertex>> rotation, std::vector<Vertex> outer_face);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }

  std::span<const Vertex> rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
  // Position of u in rotation(v); u must be a neighbour of v.
  int rotation_index(Vertex v, Vertex u) const;
  Vertex successor(Vertex v, Vertex u) const;
  Vertex predecessor(Vertex v, Vertex u) const;

  const std::vector<FacialWalk>& faces() const { return faces_; }
  int outer_face_index() const { return outer_index_; }
  const FacialWalk& outer_face() const { return outer_; }
  bool on_outer_face(Vertex v) const { return on_outer_[static_cast<std::size_t>(v)] != 0; }

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.graph_ == b.graph_ && a.rotation_ == b.rotation_ && a.outer_ == b.outer_;
  }

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::array<int, 2>> rotation_pos_;  // per edge: index at u, index at v
  std::vector<FacialWalk> faces_;
  FacialWalk outer_;
  int outer_index_ = -1;
  std::vector<char> on_outer_;
};

// Name-level constructor used by parsers and tests.
PlaneGraph build_plane_graph(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges,
                             const std::map<std::string, std::vector<std::string>>& rotation,
                             const std::vector<std::string>& outer_face);

std::vector<FacialWalk> trace_faces(const PlaneGraph& pg);

// PASS iff connected, the outer face is a simple cycle and every other face
// is a triangle.
VerificationReport validate_near_triangulation(const PlaneGraph& pg);

// Lexicographically smallest edge joining two outer-cycle vertices that is
// not itself on the outer cycle. Throws Error{NotNearTriangulation}.
std::optional<Edge> find_chord(const PlaneGraph& pg);

struct EarPath {
  Vertex z;
  Vertex w;
  std::vector<Vertex> path;  // x, ..., w: the neighbours of z in rotation order
};

// Ear vertex next to x (away from y) and its neighbour path. Requires a
// chordless near-triangulation on more than three vertices with xy on the
// outer cycle.
EarPath ear_path(const PlaneGraph& pg, Vertex x, Vertex y);

}  // namespace atplanar
