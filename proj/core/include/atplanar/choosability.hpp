#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atplanar/graph.hpp"
#include "atplanar/report.hpp"

namespace atplanar {

// Per-vertex colour lists. Colours are opaque names interned into a sorted
// palette; lists hold palette indices in ascending order.
class ListAssignment {
 public:
  ListAssignment() = default;

  // Throws Error{UnknownVertex} for a list on a non-vertex and
  // Error{PreconditionViolated} when a vertex has no list.
  ListAssignment(const Graph& g, const std::map<std::string, std::vector<std::string>>& lists);

  // Every vertex gets {0, ..., k-1}, named "1".."k".
  static ListAssignment uniform(const Graph& g, int k);

  int vertex_count() const { return static_cast<int>(lists_.size()); }
  std::span<const std::string> palette() const { return palette_; }
  const std::string& color_name(int c) const { return palette_[static_cast<std::size_t>(c)]; }
  std::span<const int> list(Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
  bool allows(Vertex v, int color) const;

  std::map<std::string, std::vector<std::string>> to_names(const Graph& g) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::string> palette_;
  std::vector<std::vector<int>> lists_;
};

// Palette index per vertex.
using Coloring = std::vector<int>;

// Backtracking with forward checking, fewest remaining colours first (ties
// to the lowest vertex), colours tried in palette order.
std::optional<Coloring> is_l_colorable(const Graph& g, const ListAssignment& l);

// Same answer as is_l_colorable, searched by fixing the colours of
// `separator` first and then solving each component of G - separator alone.
std::optional<Coloring> is_l_colorable_separated(const Graph& g, const ListAssignment& l,
                                                 std::span<const Vertex> separator);

bool is_proper_l_coloring(const Graph& g, const ListAssignment& l, const Coloring& c);

// PASS iff every list has exactly k colours and no L-colouring exists.
VerificationReport verify_witness_not_k_choosable(const Graph& g, const ListAssignment& l, int k);

// Throws Error{CapExceeded} above max_vertices.
int chromatic_number(const Graph& g, int max_vertices = 64);

// The member of the J-family selected by `selector` with the list assignment
// that defeats it. Throws Error{BadSelector}.
std::pair<Graph, ListAssignment> build_lemma1_lists(std::string_view selector);

}  // namespace atplanar
