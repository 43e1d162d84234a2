#pragma once

#include "atplanar/alon_tarsi.hpp"
#include "atplanar/graph.hpp"
#include "atplanar/orientation.hpp"
#include "atplanar/plane_graph.hpp"
#include "atplanar/random.hpp"

namespace atplanar::testkit {

// Random triangulation of a boundary_len-gon followed by n - boundary_len
// stackings into uniformly chosen interior faces. Vertex names are
// zero-padded "v<k>" assigned in shuffled order. Throws Error{BadParameters}.
PlaneGraph random_near_triangulation(int n, int boundary_len, Seed seed);

// Each of the n(n-1)/2 pairs independently with probability p; vertices
// "v0".."v<n-1>". Throws Error{BadParameters}.
Graph random_graph(int n, double edge_probability, Seed seed);

// Random orientation of every edge of g.
Orientation random_orientation(const Graph& g, Rng& rng);

// Independent Eulerian parity count: depth-first over arcs carrying the
// per-vertex balance, closing a vertex once its last arc is decided.
// Throws Error{CapExceeded} above 20 arcs.
ParityCount brute_force_eulerian_diff_oracle(const Orientation& d);

}  // namespace atplanar::testkit
