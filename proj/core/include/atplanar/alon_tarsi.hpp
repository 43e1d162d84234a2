#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "atplanar/graph.hpp"
#include "atplanar/orientation.hpp"

namespace atplanar {

// Enumeration budgets. These are configuration: raise them deliberately for
// bigger instances, the defaults keep every routine in the millisecond range.
struct EnumerationLimits {
  int parity_arc_cap = 24;        // eulerian_diff: 2^arcs subsets
  int coefficient_edge_cap = 40;  // poly_coefficient
  int orientation_edge_cap = 20;  // find_at_orientation / at_number
  int workers = 1;                // subset ranges split across threads
};

// Counts of spanning Eulerian sub-digraphs by parity of arc count. The empty
// arc set is Eulerian and even.
struct ParityCount {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;

  std::int64_t diff() const { return static_cast<std::int64_t>(even) - static_cast<std::int64_t>(odd); }
  friend bool operator==(const ParityCount&, const ParityCount&) = default;
};

// Per-vertex exponents, indexed by vertex (lexicographic variable order).
using ExponentVector = std::vector<int>;

// Gray-code walk over all arc subsets. Throws Error{ParityCapExceeded}.
ParityCount eulerian_diff(const Orientation& d, const EnumerationLimits& limits = {});

// Coefficient of x^eta in prod_{uv in E, u<v} (x_v - x_u), exact.
// Throws Error{DegreeMismatch, CapExceeded, Overflow}.
std::int64_t poly_coefficient(const Graph& g, std::span<const int> eta, const EnumerationLimits& limits = {});

// First orientation (deterministic order) with every out-degree below k and a
// nonzero even/odd Eulerian difference. Out-degree sequences are tried in
// lexicographic order; for each, the coefficient decides whether any
// orientation realising it qualifies, and the returned orientation is
// re-checked by direct Eulerian counting. Throws Error{CapExceeded}.
std::optional<Orientation> find_at_orientation(const Graph& g, int k, const EnumerationLimits& limits = {});

// Least k with find_at_orientation(g, k) nonempty.
int at_number(const Graph& g, const EnumerationLimits& limits = {});

// Orientation with the given out-degree sequence (first in edge order with
// the lower endpoint tried as tail first), if one exists.
std::optional<Orientation> orientation_with_out_degrees(const Graph& g, std::span<const int> out_degrees);

}  // namespace atplanar
