#pragma once

#include <array>
#include <vector>

#include "atplanar/alon_tarsi.hpp"
#include "atplanar/graph.hpp"
#include "atplanar/orientation.hpp"
#include "atplanar/plane_graph.hpp"
#include "atplanar/report.hpp"

namespace atplanar {

enum class TraceKind { Base, Chord, Ear };

// One step of the recursion.
//   Base : vertices = handle x, handle y, apex t of a bare triangle
//   Chord: vertices = chord u, v in the order used as the split-off handle;
//          children = {side keeping the handle, split-off side}
//   Ear  : vertices = removed ear vertex z, its far boundary neighbour w;
//          children = {the remaining region}
struct TraceNode {
  TraceKind kind = TraceKind::Base;
  std::array<Vertex, 3> vertices{-1, -1, -1};
  std::vector<int> children;

  friend bool operator==(const TraceNode&, const TraceNode&) = default;
};

struct DecompositionTrace {
  std::vector<TraceNode> nodes;
  int root = -1;

  bool empty() const { return nodes.empty(); }
  friend bool operator==(const DecompositionTrace&, const DecompositionTrace&) = default;
};

// Forest F containing the handle plus an orientation of the remaining edges
// with out-degree 0 at both handle ends, at most 1 on the outer cycle and at
// most 2 inside.
struct Decomposition {
  Vertex handle_x = -1;
  Vertex handle_y = -1;
  std::vector<EdgeId> forest;  // sorted
  Orientation orientation;
  DecompositionTrace trace;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Throws Error{NotNearTriangulation, HandleNotOnBoundary}.
Decomposition decompose(const PlaneGraph& pg, Vertex x, Vertex y);

enum class VerifyMode { Structural, Parity };

// Structural: partition of E(G), forest, handle membership, out-degree
// bounds, acyclicity, trace shape. Parity additionally requires the
// even-minus-odd Eulerian count to be exactly 1 (throws
// Error{ParityCapExceeded} past limits.parity_arc_cap).
VerificationReport verify_decomposition(const PlaneGraph& pg, const Decomposition& d, VerifyMode mode,
                                        const EnumerationLimits& limits = {});

struct ForestCertificate {
  std::vector<EdgeId> forest;  // sorted, ids of the input graph
  Orientation orientation;     // acyclic, out-degree <= 2
};

// Adds edges until the embedding is a near-triangulation: repeated outer
// vertices are clipped first, then every bounded face is split into
// triangles, fanning from its least vertex whenever that creates no parallel
// edge. Throws Error{Disconnected, InvalidEmbedding}.
PlaneGraph augment_to_near_triangulation(const PlaneGraph& pg);

// Runs decompose on the augmentation (handle: least outer vertex and its
// traced successor) and restricts the result to the input edges.
ForestCertificate decompose_any_planar(const PlaneGraph& pg);

// Checks a ForestCertificate: partition of E(G), forest, acyclic, out-degree
// at most 2.
VerificationReport verify_forest_certificate(const Graph& g, const ForestCertificate& cert);

}  // namespace atplanar
