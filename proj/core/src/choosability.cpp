#include "atplanar/choosability.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "atplanar/error.hpp"
#include "atplanar/gadgets.hpp"

namespace atplanar {

ListAssignment::ListAssignment(const Graph& g, const std::map<std::string, std::vector<std::string>>& lists) {
  std::set<std::string> colors;
  for (const auto& [name, list] : lists) {
    g.vertex(name);
    colors.insert(list.begin(), list.end());
  }
  palette_.assign(colors.begin(), colors.end());
  lists_.resize(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto it = lists.find(g.name(v));
    if (it == lists.end()) throw Error(ErrorCode::PreconditionViolated, "vertex '" + g.name(v) + "' has no list");
    auto& out = lists_[static_cast<std::size_t>(v)];
    for (const auto& c : it->second)
      out.push_back(static_cast<int>(std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
}

ListAssignment ListAssignment::uniform(const Graph& g, int k) {
  ListAssignment l;
  std::vector<int> all;
  for (int c = 0; c < k; ++c) {
    l.palette_.push_back(std::to_string(c + 1));
    all.push_back(c);
  }
  std::sort(l.palette_.begin(), l.palette_.end());
  l.lists_.assign(static_cast<std::size_t>(g.vertex_count()), all);
  return l;
}

bool ListAssignment::allows(Vertex v, int color) const {
  const auto& l = lists_[static_cast<std::size_t>(v)];
  return std::binary_search(l.begin(), l.end(), color);
}

std::map<std::string, std::vector<std::string>> ListAssignment::to_names(const Graph& g) const {
  std::map<std::string, std::vector<std::string>> out;
  for (Vertex v = 0; v < vertex_count(); ++v) {
    auto& names = out[g.name(v)];
    for (int c : list(v)) names.push_back(color_name(c));
  }
  return out;
}

namespace {

class Solver {
 public:
  // Colours the vertices flagged in `active`; the others keep the colour
  // given in `color` (or -1 to be ignored).
  Solver(const Graph& g, const ListAssignment& l, std::vector<char> active, Coloring color)
      : g_(g), l_(l), active_(std::move(active)), color_(std::move(color)) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    alive_.resize(n);
    count_.assign(n, 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!active_[static_cast<std::size_t>(v)]) continue;
      auto list = l.list(v);
      auto& alive = alive_[static_cast<std::size_t>(v)];
      alive.assign(list.size(), 1);
      for (std::size_t s = 0; s < list.size(); ++s) {
        for (Vertex w : g.neighbors(v)) {
          if (!active_[static_cast<std::size_t>(w)] && color_[static_cast<std::size_t>(w)] == list[s]) {
            alive[s] = 0;
            break;
          }
        }
        count_[static_cast<std::size_t>(v)] += alive[s];
      }
    }
  }

  bool solve() { return search(); }
  const Coloring& coloring() const { return color_; }

 private:
  bool search() {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (!active_[vi] || color_[vi] >= 0) continue;
      if (best < 0 || count_[vi] < count_[static_cast<std::size_t>(best)]) best = v;
    }
    if (best < 0) return true;
    auto bi = static_cast<std::size_t>(best);
    if (count_[bi] == 0) return false;
    auto list = l_.list(best);
    for (std::size_t s = 0; s < list.size(); ++s) {
      if (!alive_[bi][s]) continue;
      const int c = list[s];
      color_[bi] = c;
      std::size_t mark = trail_.size();
      bool ok = true;
      for (Vertex w : g_.neighbors(best)) {
        auto wi = static_cast<std::size_t>(w);
        if (!active_[wi] || color_[wi] >= 0) continue;
        auto wl = l_.list(w);
        auto it = std::lower_bound(wl.begin(), wl.end(), c);
        if (it == wl.end() || *it != c) continue;
        auto slot = static_cast<std::size_t>(it - wl.begin());
        if (!alive_[wi][slot]) continue;
        alive_[wi][slot] = 0;
        --count_[wi];
        trail_.push_back({w, static_cast<int>(slot)});
        if (count_[wi] == 0) {
          ok = false;
          break;
        }
      }
      if (ok && search()) return true;
      while (trail_.size() > mark) {
        auto [w, slot] = trail_.back();
        trail_.pop_back();
        alive_[static_cast<std::size_t>(w)][static_cast<std::size_t>(slot)] = 1;
        ++count_[static_cast<std::size_t>(w)];
      }
      color_[bi] = -1;
    }
    return false;
  }

  const Graph& g_;
  const ListAssignment& l_;
  std::vector<char> active_;
  Coloring color_;
  std::vector<std::vector<char>> alive_;
  std::vector<int> count_;
  std::vector<std::pair<Vertex, int>> trail_;
};

}  // namespace

std::optional<Coloring> is_l_colorable(const Graph& g, const ListAssignment& l) {
  if (l.vertex_count() != g.vertex_count())
    throw Error(ErrorCode::PreconditionViolated, "list assignment does not match the graph");
  Solver s(g, l, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 1),
           Coloring(static_cast<std::size_t>(g.vertex_count()), -1));
  if (!s.solve()) return std::nullopt;
  return s.coloring();
}

std::optional<Coloring> is_l_colorable_separated(const Graph& g, const ListAssignment& l,
                                                 std::span<const Vertex> separator) {
  if (l.vertex_count() != g.vertex_count())
    throw Error(ErrorCode::PreconditionViolated, "list assignment does not match the graph");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> in_sep(n, 0);
  for (Vertex s : separator) in_sep[static_cast<std::size_t>(s)] = 1;

  std::vector<std::vector<char>> components;
  std::vector<char> seen(in_sep);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<char> comp(n, 0);
    std::vector<Vertex> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp[static_cast<std::size_t>(v)] = 1;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    components.push_back(std::move(comp));
  }

  Coloring color(n, -1);
  std::vector<std::size_t> pick(separator.size(), 0);
  for (Vertex s : separator)
    if (l.list(s).empty()) return std::nullopt;
  while (true) {
    bool proper = true;
    for (std::size_t i = 0; i < separator.size(); ++i)
      color[static_cast<std::size_t>(separator[i])] = l.list(separator[i])[pick[i]];
    for (std::size_t i = 0; i < separator.size() && proper; ++i)
      for (std::size_t j = i + 1; j < separator.size() && proper; ++j)
        if (g.adjacent(separator[i], separator[j]) &&
            color[static_cast<std::size_t>(separator[i])] == color[static_cast<std::size_t>(separator[j])])
          proper = false;
    if (proper) {
      Coloring result = color;
      bool all = true;
      for (const auto& comp : components) {
        Solver s(g, l, comp, color);
        if (!s.solve()) {
          all = false;
          break;
        }
        for (std::size_t v = 0; v < n; ++v)
          if (comp[v]) result[v] = s.coloring()[v];
      }
      if (all) return result;
    }
    std::size_t i = 0;
    while (i < separator.size() && ++pick[i] == l.list(separator[i]).size()) pick[i++] = 0;
    if (i == separator.size()) return std::nullopt;
  }
}

bool is_proper_l_coloring(const Graph& g, const ListAssignment& l, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.vertex_count()) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!l.allows(v, c[static_cast<std::size_t>(v)])) return false;
  for (const Edge& e : g.edges())
    if (c[static_cast<std::size_t>(e.u)] == c[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

VerificationReport verify_witness_not_k_choosable(const Graph& g, const ListAssignment& l, int k) {
  VerificationReport report("not-" + std::to_string(k) + "-choosable");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(l.list(v).size()) != k) {
      report.fail("list size: |L(" + g.name(v) + ")| = " + std::to_string(l.list(v).size()));
      return report;
    }
  }
  report.cases_examined = 1;
  if (auto c = is_l_colorable(g, l)) {
    std::string text;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      text += (text.empty() ? "" : ",") + g.name(v) + "=" + l.color_name((*c)[static_cast<std::size_t>(v)]);
    report.fail("colourable: " + text);
  }
  return report;
}

int chromatic_number(const Graph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw Error(ErrorCode::CapExceeded, std::to_string(g.vertex_count()) + " vertices exceed the colouring cap of " +
                                            std::to_string(max_vertices));
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k)
    if (is_l_colorable(g, ListAssignment::uniform(g, k))) return k;
}

std::pair<Graph, ListAssignment> build_lemma1_lists(std::string_view selector) {
  Graph g = build_jfamily(selector);
  const std::array<std::string, 3> base{"alpha", "beta", "gamma"};
  const std::string omega = "omega";
  std::map<std::string, std::vector<std::string>> lists;
  std::vector<std::string> abc(base.begin(), base.end());
  lists["a"] = abc;
  lists["b"] = abc;
  std::array<int, 3> perm{0, 1, 2};
  for (int i = 1; i <= 6; ++i) {
    const auto& x = base[static_cast<std::size_t>(perm[0])];
    const auto& y = base[static_cast<std::size_t>(perm[1])];
    const auto& z = base[static_cast<std::size_t>(perm[2])];
    auto idx = std::to_string(i);
    lists["c" + idx] = abc;
    lists["e" + idx] = {x, y, omega};
    if (selector[static_cast<std::size_t>(i - 1)] == 'a')
      lists["d" + idx] = {x, z, omega};
    else
      lists["d" + idx] = {y, z, omega};
    std::next_permutation(perm.begin(), perm.end());
  }
  ListAssignment l(g, lists);
  return {std::move(g), std::move(l)};
}

}  // namespace atplanar
