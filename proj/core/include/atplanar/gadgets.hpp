#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atplanar/graph.hpp"
#include "atplanar/random.hpp"
#include "atplanar/report.hpp"
#include "atplanar/star_forest.hpp"

namespace atplanar {

enum class GadgetKind { J1, J2, JFamily, J3, S, G1, A, D, G2 };

struct GadgetId {
  GadgetKind kind = GadgetKind::J1;
  std::string selector;  // six letters over {a, b}, JFamily only
};

// Accepts the names J1 J2 JFamily J3 S G1 A D G2 (any case). Throws
// Error{BadParameters} for an unknown name and Error{BadSelector} when the
// selector is missing, malformed or given for another gadget.
GadgetId parse_gadget_id(std::string_view name, std::string_view selector = {});
std::string gadget_name(GadgetKind kind);

Graph build_gadget(const GadgetId& id);

// Handle ab throughout, except A (handle xy).
Graph build_j1();  // 4-wheel with hub a
Graph build_j2();  // 4-wheel with hub b
// Copy i uses J1 when selector[i] == 'a' (d_i adjacent to a), J2 otherwise.
// Vertices a, b, c1..c6, d1..d6, e1..e6.
Graph build_jfamily(std::string_view selector);
// a, b complete to the path c-d-e-f-g, plus apexes h on (a;d,e), i on
// (a;e,f), j on (b;d,e), k on (b;e,f).
Graph build_j3();
Graph build_s();   // nine J3 copies on ab; copy j's vertices are c_j .. k_j
Graph build_g1();  // centre c, leaves v1..v4; copy i of S on c v_i, prefixed "S<i>:"
Graph build_a();   // x, y complete to paths p<i>_1 .. p<i>_4, i = 1..3
Graph build_d();   // K4 on a, b, c, d plus an apex z<face> in each face
Graph build_g2();  // D plus a copy of A on every edge u v, prefixed "A[u-v]:"

// Anchored copy of J1 or J2 with handle (a, b): c and e adjacent to both,
// path c-d-e, and d adjacent to a (J1) or b (J2).
struct JCopy {
  bool second = false;  // J2
  Vertex c = -1;
  Vertex d = -1;
  Vertex e = -1;

  friend bool operator==(const JCopy&, const JCopy&) = default;
};

// Search order: J1 before J2, then the d-role vertex, then c < e, all taken
// from `candidates`.
std::optional<JCopy> find_anchored_j(const Graph& g, Vertex a, Vertex b, std::span<const Vertex> candidates,
                                     const EdgeMask* removed = nullptr);

// The nine J3 copies of an S embedded in a host graph.
struct SLayout {
  Vertex a = -1;
  Vertex b = -1;
  std::array<std::array<Vertex, 9>, 9> copies{};  // copies[j] = roles c..k of copy j+1
};

// Host vertex names are prefix + role + "_" + copy.
SLayout s_layout(const Graph& host, std::string_view prefix, std::string_view a, std::string_view b);

struct K4Witness {
  std::array<Vertex, 4> vertices{};
  int copy = -1;  // 0-based J3 copy it was found in
};

struct JFamilyWitness {
  std::string selector;
  std::array<int, 6> copies{};  // 0-based J3 copies used
  std::array<JCopy, 6> parts{};
};

using Obstruction = std::variant<K4Witness, JFamilyWitness>;

// h must have maximum degree 3 and avoid a. Throws
// Error{PreconditionViolated}.
Obstruction extract_obstruction(const Graph& host, const SLayout& s, const EdgeMask& h);

// The witness parts are distinct, present in host - removed, and the induced
// selector passes verify_lemma1.
VerificationReport verify_jfamily_witness(const Graph& host, const EdgeMask& removed, Vertex a, Vertex b,
                                          const JFamilyWitness& w);

VerificationReport verify_lemma1(std::string_view selector);
// All 64 selectors.
VerificationReport verify_lemma1_all(int workers = 1);
VerificationReport verify_lemma2();
VerificationReport verify_lemma6();
VerificationReport verify_theorem7_core();

// Each edge of F_D joins a centre to a non-centre, no non-centre meets two
// F_D edges, and every edge of D has a centre end.
bool theorem7_configuration_admissible(const Graph& d, std::span<const Vertex> centers, const EdgeMask& fd);

enum class SampleTarget { Theorem2, Theorem7, Corollary3 };

// Throws Error{BadParameters} for an unknown name.
SampleTarget parse_sample_target(std::string_view name);

// Random maximal subgraph with maximum degree max_degree, edges of `skip`
// excluded. When `prefer` is given those edges are offered first.
EdgeMask random_bounded_degree_subgraph(const Graph& g, int max_degree, Rng& rng, const EdgeMask* skip = nullptr,
                                        const EdgeMask* prefer = nullptr);

// Random centre election, then each centre-to-non-centre edge is offered
// in random order and taken with a per-forest probability.
StarForest random_star_forest(const Graph& g, Rng& rng);

// Sample i draws from Seed{seed}.split(i), so the verdict and tallies do
// not depend on `workers`.
VerificationReport verify_sampled(SampleTarget target, std::uint64_t samples, Seed seed, int workers = 1);

}  // namespace atplanar
