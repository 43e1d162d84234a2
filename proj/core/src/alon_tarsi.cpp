#include "atplanar/alon_tarsi.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "atplanar/error.hpp"

namespace atplanar {

namespace {

constexpr int kMaxParityArcs = 62;

struct CompactArc {
  int tail;
  int head;
};

// Enumerates subsets whose high `fixed_bits` arcs follow `prefix` and whose
// low arcs range over everything, by Gray code.
ParityCount count_chunk(std::span<const CompactArc> arcs, int vertex_count, int low_bits, std::uint64_t prefix) {
  std::vector<int> balance(static_cast<std::size_t>(vertex_count), 0);
  int unbalanced = 0;
  auto shift = [&](int v, int delta) {
    int& b = balance[static_cast<std::size_t>(v)];
    if (b == 0) ++unbalanced;
    b += delta;
    if (b == 0) --unbalanced;
  };
  int parity = 0;
  for (std::size_t i = static_cast<std::size_t>(low_bits); i < arcs.size(); ++i) {
    if ((prefix >> (i - static_cast<std::size_t>(low_bits))) & 1ULL) {
      shift(arcs[i].tail, +1);
      shift(arcs[i].head, -1);
      parity ^= 1;
    }
  }
  std::vector<char> in(static_cast<std::size_t>(low_bits), 0);
  ParityCount count;
  auto record = [&] {
    if (unbalanced == 0) (parity ? count.odd : count.even) += 1;
  };
  record();
  const std::uint64_t steps = std::uint64_t{1} << low_bits;
  for (std::uint64_t i = 1; i < steps; ++i) {
    auto bit = static_cast<std::size_t>(std::countr_zero(i));
    int sign = in[bit] ? -1 : +1;
    in[bit] ^= 1;
    shift(arcs[bit].tail, sign);
    shift(arcs[bit].head, -sign);
    parity ^= 1;
    record();
  }
  return count;
}

void checked_add(std::int64_t& acc, std::int64_t value) {
  if (__builtin_add_overflow(acc, value, &acc)) throw Error(ErrorCode::Overflow, "coefficient exceeds 64-bit range");
}

}  // namespace

ParityCount eulerian_diff(const Orientation& d, const EnumerationLimits& limits) {
  const int m = d.arc_count();
  if (m > limits.parity_arc_cap || m > kMaxParityArcs)
    throw Error(ErrorCode::ParityCapExceeded,
                std::to_string(m) + " arcs exceed the parity cap of " + std::to_string(limits.parity_arc_cap));

  // Relabel touched vertices densely.
  std::vector<int> id(static_cast<std::size_t>(d.vertex_count()), -1);
  std::vector<CompactArc> arcs;
  int used = 0;
  for (const Arc& a : d.arcs()) {
    for (Vertex v : {a.tail, a.head})
      if (id[static_cast<std::size_t>(v)] < 0) id[static_cast<std::size_t>(v)] = used++;
    arcs.push_back({id[static_cast<std::size_t>(a.tail)], id[static_cast<std::size_t>(a.head)]});
  }

  int workers = std::max(1, limits.workers);
  int high_bits = 0;
  while ((1 << high_bits) < workers && high_bits < std::min(m, 8)) ++high_bits;
  const int low_bits = m - high_bits;
  const std::uint64_t chunks = std::uint64_t{1} << high_bits;

  std::vector<ParityCount> partial(chunks);
  if (chunks == 1) {
    partial[0] = count_chunk(arcs, used, low_bits, 0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t c = static_cast<std::uint64_t>(w); c < chunks; c += static_cast<std::uint64_t>(workers))
          partial[c] = count_chunk(arcs, used, low_bits, c);
      });
    }
  }
  ParityCount total;
  for (const auto& p : partial) {
    total.even += p.even;
    total.odd += p.odd;
  }
  return total;
}

std::int64_t poly_coefficient(const Graph& g, std::span<const int> eta, const EnumerationLimits& limits) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(eta.size()) != n)
    throw Error(ErrorCode::DegreeMismatch, "exponent vector must cover every vertex");
  long total = 0;
  for (int e : eta) {
    if (e < 0) throw Error(ErrorCode::DegreeMismatch, "negative exponent");
    total += e;
  }
  if (total != m)
    throw Error(ErrorCode::DegreeMismatch,
                "exponents sum to " + std::to_string(total) + " but the graph has " + std::to_string(m) + " edges");
  if (m > limits.coefficient_edge_cap)
    throw Error(ErrorCode::CapExceeded,
                std::to_string(m) + " edges exceed the coefficient cap of " + std::to_string(limits.coefficient_edge_cap));
  for (Vertex v = 0; v < n; ++v)
    if (eta[static_cast<std::size_t>(v)] > g.degree(v)) return 0;

  // Layered dynamic programme over edges: the state is how many more
  // factors each vertex still has to contribute. Vertices whose edges are
  // all processed must be at zero, which keeps the live state small.
  std::vector<int> remaining_degree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) remaining_degree[static_cast<std::size_t>(v)] = g.degree(v);

  using State = std::string;
  std::unordered_map<State, std::int64_t> layer, next;
  State start(static_cast<std::size_t>(n), '\0');
  for (Vertex v = 0; v < n; ++v) start[static_cast<std::size_t>(v)] = static_cast<char>(eta[static_cast<std::size_t>(v)]);
  layer.emplace(std::move(start), 1);

  for (const Edge& e : g.edges()) {
    auto u = static_cast<std::size_t>(e.u);
    auto v = static_cast<std::size_t>(e.v);
    --remaining_degree[u];
    --remaining_degree[v];
    next.clear();
    for (const auto& [state, coeff] : layer) {
      // Factor (x_v - x_u): take x_v with sign +, or x_u with sign -.
      for (int pick = 0; pick < 2; ++pick) {
        std::size_t w = pick == 0 ? v : u;
        if (state[w] == 0) continue;
        State s = state;
        --s[w];
        if (s[u] > remaining_degree[u] || s[v] > remaining_degree[v]) continue;
        std::int64_t term = pick == 0 ? coeff : -coeff;
        if (pick == 1 && coeff == INT64_MIN) throw Error(ErrorCode::Overflow, "coefficient exceeds 64-bit range");
        checked_add(next[s], term);
      }
    }
    std::swap(layer, next);
    if (layer.empty()) return 0;
  }
  std::int64_t result = 0;
  for (const auto& [state, coeff] : layer) checked_add(result, coeff);
  return result;
}

std::optional<Orientation> orientation_with_out_degrees(const Graph& g, std::span<const int> out_degrees) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(out_degrees.size()) != n) return std::nullopt;
  std::vector<int> need(out_degrees.begin(), out_degrees.end());
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = g.degree(v);
  for (Vertex v = 0; v < n; ++v)
    if (need[static_cast<std::size_t>(v)] < 0 || need[static_cast<std::size_t>(v)] > remaining[static_cast<std::size_t>(v)])
      return std::nullopt;

  std::vector<Arc> arcs(static_cast<std::size_t>(m));
  std::vector<int> choice(static_cast<std::size_t>(m), -1);
  // Iterative depth-first search over per-edge tail choices.
  int i = 0;
  while (i >= 0) {
    if (i == m) break;
    const Edge& e = g.edge(i);
    auto u = static_cast<std::size_t>(e.u);
    auto v = static_cast<std::size_t>(e.v);
    int& c = choice[static_cast<std::size_t>(i)];
    if (c >= 0) {  // undo previous choice
      ++need[c == 0 ? u : v];
      ++remaining[u];
      ++remaining[v];
    }
    bool advanced = false;
    while (++c < 2) {
      std::size_t tail = c == 0 ? u : v;
      if (need[tail] == 0) continue;
      --need[tail];
      --remaining[u];
      --remaining[v];
      if (need[u] <= remaining[u] && need[v] <= remaining[v]) {
        advanced = true;
        break;
      }
      ++need[tail];
      ++remaining[u];
      ++remaining[v];
    }
    if (advanced) {
      ++i;
    } else {
      c = -1;
      --i;
    }
  }
  if (i < 0) return std::nullopt;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    arcs[static_cast<std::size_t>(e)] = choice[static_cast<std::size_t>(e)] == 0 ? Arc{ed.u, ed.v, e} : Arc{ed.v, ed.u, e};
  }
  return Orientation(g, std::move(arcs));
}

std::optional<Orientation> find_at_orientation(const Graph& g, int k, const EnumerationLimits& limits) {
  if (k <= 0) throw Error(ErrorCode::BadParameters, "k must be positive");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > limits.orientation_edge_cap)
    throw Error(ErrorCode::CapExceeded,
                std::to_string(m) + " edges exceed the orientation cap of " + std::to_string(limits.orientation_edge_cap));

  std::vector<int> bound(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) bound[static_cast<std::size_t>(v)] = std::min(k - 1, g.degree(v));
  // suffix[v] = largest total the vertices v.. can still absorb
  std::vector<int> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int v = n - 1; v >= 0; --v)
    suffix[static_cast<std::size_t>(v)] = suffix[static_cast<std::size_t>(v) + 1] + bound[static_cast<std::size_t>(v)];
  if (suffix[0] < m) return std::nullopt;

  std::vector<int> eta(static_cast<std::size_t>(n), -1);
  int v = 0;
  int placed = 0;
  while (v >= 0) {
    if (v == n) {
      if (placed == m && poly_coefficient(g, eta, limits) != 0) {
        auto d = orientation_with_out_degrees(g, eta);
        if (!d) throw Error(ErrorCode::PreconditionViolated, "nonzero coefficient without a realising orientation");
        if (d->arc_count() <= limits.parity_arc_cap) {
          auto pc = eulerian_diff(*d, limits);
          if (pc.diff() == 0) throw Error(ErrorCode::PreconditionViolated, "coefficient and Eulerian difference disagree");
        }
        return d;
      }
      --v;
      continue;
    }
    auto vi = static_cast<std::size_t>(v);
    if (eta[vi] >= 0) placed -= eta[vi];
    ++eta[vi];
    // smallest admissible value: the rest must still be able to absorb m
    int lo = std::max(eta[vi], m - placed - suffix[vi + 1]);
    if (lo > bound[vi] || placed + lo > m) {
      eta[vi] = -1;
      --v;
      continue;
    }
    eta[vi] = lo;
    placed += lo;
    ++v;
  }
  return std::nullopt;
}

int at_number(const Graph& g, const EnumerationLimits& limits) {
  if (g.edge_count() > limits.orientation_edge_cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(g.edge_count()) + " edges exceed the orientation cap of " +
                                            std::to_string(limits.orientation_edge_cap));
  for (int k = 1; k <= g.max_degree() + 1; ++k)
    if (find_at_orientation(g, k, limits)) return k;
  throw Error(ErrorCode::PreconditionViolated, "no Alon-Tarsi orientation up to max degree + 1");
}

}  // namespace atplanar
