#include "atplanar/gadgets.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "atplanar/choosability.hpp"
#include "atplanar/error.hpp"
#include "parallel.hpp"

namespace atplanar {

namespace {

constexpr std::string_view kRoles = "cdefghijk";

void check_selector(std::string_view selector) {
  if (selector.size() != 6 || selector.find_first_not_of("ab") != std::string_view::npos)
    throw Error(ErrorCode::BadSelector, "selector must be six letters over {a,b}, got '" + std::string(selector) + "'");
}

// Adds a renamed copy of `pattern`; vertices listed in `glue` map onto
// existing host vertices and edges among glued vertices are skipped.
void append_copy(GraphBuilder& gb, const Graph& pattern, const std::map<std::string, std::string>& glue,
                 const std::function<std::string(const std::string&)>& rename) {
  auto host = [&](const std::string& v) {
    auto it = glue.find(v);
    return it != glue.end() ? it->second : rename(v);
  };
  for (const auto& v : pattern.names())
    if (!glue.count(v)) gb.vertex(rename(v));
  for (const Edge& e : pattern.edges()) {
    const auto& u = pattern.name(e.u);
    const auto& w = pattern.name(e.v);
    if (glue.count(u) && glue.count(w)) continue;
    gb.edge(host(u), host(w));
  }
}

Graph wheel(bool hub_b) {
  GraphBuilder gb;
  for (auto v : {"a", "b", "c", "d", "e"}) gb.vertex(v);
  gb.edge("a", "b").edge("a", "c").edge("b", "c").edge("a", "e").edge("b", "e").edge("c", "d").edge("d", "e");
  gb.edge(hub_b ? "b" : "a", "d");
  return gb.build();
}

bool live(const Graph& g, Vertex p, Vertex q, const EdgeMask* removed) {
  auto e = g.edge_id(p, q);
  return e && (!removed || !removed->contains(*e));
}

std::optional<std::array<Vertex, 4>> first_k4_among(const Graph& g, std::vector<Vertex> vs, const EdgeMask& removed) {
  std::sort(vs.begin(), vs.end());
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!live(g, vs[i], vs[j], &removed)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!live(g, vs[i], vs[k], &removed) || !live(g, vs[j], vs[k], &removed)) continue;
        for (std::size_t l = k + 1; l < n; ++l)
          if (live(g, vs[i], vs[l], &removed) && live(g, vs[j], vs[l], &removed) && live(g, vs[k], vs[l], &removed))
            return std::array<Vertex, 4>{vs[i], vs[j], vs[k], vs[l]};
      }
    }
  return std::nullopt;
}

std::string edge_list(const Graph& g, const EdgeMask& m) {
  std::string out;
  for (EdgeId e : m.members()) out += (out.empty() ? "" : ",") + g.name(g.edge(e).u) + g.name(g.edge(e).v);
  return "{" + out + "}";
}

}  // namespace

GadgetId parse_gadget_id(std::string_view name, std::string_view selector) {
  static const std::array<std::pair<std::string_view, GadgetKind>, 9> table{{{"j1", GadgetKind::J1},
                                                                            {"j2", GadgetKind::J2},
                                                                            {"jfamily", GadgetKind::JFamily},
                                                                            {"j3", GadgetKind::J3},
                                                                            {"s", GadgetKind::S},
                                                                            {"g1", GadgetKind::G1},
                                                                            {"a", GadgetKind::A},
                                                                            {"d", GadgetKind::D},
                                                                            {"g2", GadgetKind::G2}}};
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (auto [key, kind] : table) {
    if (key != lower) continue;
    if (kind == GadgetKind::JFamily) {
      check_selector(selector);
    } else if (!selector.empty()) {
      throw Error(ErrorCode::BadSelector, "only JFamily takes a selector");
    }
    return GadgetId{kind, std::string(selector)};
  }
  throw Error(ErrorCode::BadParameters, "unknown gadget '" + std::string(name) + "'");
}

std::string gadget_name(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::J1: return "J1";
    case GadgetKind::J2: return "J2";
    case GadgetKind::JFamily: return "JFamily";
    case GadgetKind::J3: return "J3";
    case GadgetKind::S: return "S";
    case GadgetKind::G1: return "G1";
    case GadgetKind::A: return "A";
    case GadgetKind::D: return "D";
    case GadgetKind::G2: return "G2";
  }
  return "?";
}

Graph build_gadget(const GadgetId& id) {
  switch (id.kind) {
    case GadgetKind::J1: return build_j1();
    case GadgetKind::J2: return build_j2();
    case GadgetKind::JFamily: return build_jfamily(id.selector);
    case GadgetKind::J3: return build_j3();
    case GadgetKind::S: return build_s();
    case GadgetKind::G1: return build_g1();
    case GadgetKind::A: return build_a();
    case GadgetKind::D: return build_d();
    case GadgetKind::G2: return build_g2();
  }
  throw Error(ErrorCode::BadParameters, "unknown gadget");
}

Graph build_j1() { return wheel(false); }
Graph build_j2() { return wheel(true); }

Graph build_jfamily(std::string_view selector) {
  check_selector(selector);
  GraphBuilder gb;
  gb.vertex("a").vertex("b").edge("a", "b");
  for (int i = 1; i <= 6; ++i) {
    const Graph& pattern = selector[static_cast<std::size_t>(i - 1)] == 'a' ? build_j1() : build_j2();
    auto idx = std::to_string(i);
    append_copy(gb, pattern, {{"a", "a"}, {"b", "b"}}, [&](const std::string& v) { return v + idx; });
  }
  return gb.build();
}

Graph build_j3() {
  GraphBuilder gb;
  for (char v = 'a'; v <= 'k'; ++v) gb.vertex(std::string(1, v));
  gb.edge("a", "b");
  for (auto p : {"c", "d", "e", "f", "g"}) gb.edge("a", p).edge("b", p);
  gb.edge("c", "d").edge("d", "e").edge("e", "f").edge("f", "g");
  gb.edge("a", "h").edge("h", "d").edge("h", "e");
  gb.edge("a", "i").edge("i", "e").edge("i", "f");
  gb.edge("b", "j").edge("j", "d").edge("j", "e");
  gb.edge("b", "k").edge("k", "e").edge("k", "f");
  return gb.build();
}

Graph build_s() {
  Graph j3 = build_j3();
  GraphBuilder gb;
  gb.vertex("a").vertex("b").edge("a", "b");
  for (int j = 1; j <= 9; ++j) {
    auto idx = "_" + std::to_string(j);
    append_copy(gb, j3, {{"a", "a"}, {"b", "b"}}, [&](const std::string& v) { return v + idx; });
  }
  return gb.build();
}

Graph build_g1() {
  Graph s = build_s();
  GraphBuilder gb;
  gb.vertex("c");
  for (int i = 1; i <= 4; ++i) {
    auto leaf = "v" + std::to_string(i);
    gb.vertex(leaf).edge("c", leaf);
    auto prefix = "S" + std::to_string(i) + ":";
    append_copy(gb, s, {{"a", "c"}, {"b", leaf}}, [&](const std::string& v) { return prefix + v; });
  }
  return gb.build();
}

Graph build_a() {
  GraphBuilder gb;
  gb.vertex("x").vertex("y").edge("x", "y");
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 4; ++j) {
      auto p = "p" + std::to_string(i) + "_" + std::to_string(j);
      gb.vertex(p).edge("x", p).edge("y", p);
      if (j > 1) gb.edge("p" + std::to_string(i) + "_" + std::to_string(j - 1), p);
    }
  }
  return gb.build();
}

Graph build_d() {
  GraphBuilder gb;
  const std::array<std::string, 4> k4{"a", "b", "c", "d"};
  for (const auto& v : k4) gb.vertex(v);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) gb.edge(k4[i], k4[j]);
  for (std::size_t skip = 4; skip-- > 0;) {
    std::string z = "z";
    std::vector<std::string> face;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) {
        z += k4[i];
        face.push_back(k4[i]);
      }
    gb.vertex(z);
    for (const auto& v : face) gb.edge(z, v);
  }
  return gb.build();
}

Graph build_g2() {
  Graph d = build_d();
  Graph a = build_a();
  GraphBuilder gb;
  for (const auto& v : d.names()) gb.vertex(v);
  for (const Edge& e : d.edges()) {
    const auto& u = d.name(e.u);
    const auto& v = d.name(e.v);
    gb.edge(u, v);
    auto prefix = "A[" + u + "-" + v + "]:";
    append_copy(gb, a, {{"x", u}, {"y", v}}, [&](const std::string& w) { return prefix + w; });
  }
  return gb.build();
}

std::optional<JCopy> find_anchored_j(const Graph& g, Vertex a, Vertex b, std::span<const Vertex> candidates,
                                     const EdgeMask* removed) {
  std::vector<Vertex> cand;
  for (Vertex v : candidates)
    if (v != a && v != b) cand.push_back(v);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Vertex> both;
  for (Vertex v : cand)
    if (live(g, a, v, removed) && live(g, b, v, removed)) both.push_back(v);
  for (bool second : {false, true}) {
    Vertex hub = second ? b : a;
    for (Vertex d : cand) {
      if (!live(g, hub, d, removed)) continue;
      for (std::size_t i = 0; i < both.size(); ++i) {
        if (both[i] == d || !live(g, both[i], d, removed)) continue;
        for (std::size_t j = i + 1; j < both.size(); ++j)
          if (both[j] != d && live(g, d, both[j], removed)) return JCopy{second, both[i], d, both[j]};
      }
    }
  }
  return std::nullopt;
}

SLayout s_layout(const Graph& host, std::string_view prefix, std::string_view a, std::string_view b) {
  SLayout s;
  s.a = host.vertex(a);
  s.b = host.vertex(b);
  for (std::size_t j = 0; j < 9; ++j)
    for (std::size_t r = 0; r < kRoles.size(); ++r)
      s.copies[j][r] = host.vertex(std::string(prefix) + kRoles[r] + "_" + std::to_string(j + 1));
  return s;
}

Obstruction extract_obstruction(const Graph& host, const SLayout& s, const EdgeMask& h) {
  std::vector<int> degree(static_cast<std::size_t>(host.vertex_count()), 0);
  for (EdgeId e : h.members()) {
    const Edge& ed = host.edge(e);
    if (ed.u == s.a || ed.v == s.a)
      throw Error(ErrorCode::PreconditionViolated, "H contains an edge at the handle end " + host.name(s.a));
    for (Vertex v : {ed.u, ed.v})
      if (++degree[static_cast<std::size_t>(v)] > 3)
        throw Error(ErrorCode::PreconditionViolated, "H has degree above 3 at " + host.name(v));
  }

  std::vector<int> clean;
  for (int j = 0; j < 9 && clean.size() < 6; ++j) {
    bool ok = true;
    for (Vertex r : s.copies[static_cast<std::size_t>(j)]) {
      auto e = host.edge_id(s.b, r);
      if (e && h.contains(*e)) ok = false;
    }
    if (ok) clean.push_back(j);
  }
  if (clean.size() < 6) throw Error(ErrorCode::PreconditionViolated, "fewer than six copies avoid H at " + host.name(s.b));

  JFamilyWitness w;
  for (std::size_t t = 0; t < 6; ++t) {
    const auto& roles = s.copies[static_cast<std::size_t>(clean[t])];
    std::vector<Vertex> vs(roles.begin(), roles.end());
    vs.push_back(s.a);
    vs.push_back(s.b);
    if (auto k4 = first_k4_among(host, vs, h)) return K4Witness{*k4, clean[t]};
    auto part = find_anchored_j(host, s.a, s.b, roles, &h);
    if (!part)
      throw Error(ErrorCode::PreconditionViolated,
                  "copy " + std::to_string(clean[t] + 1) + " has neither K4 nor an anchored J1/J2");
    w.copies[t] = clean[t];
    w.parts[t] = *part;
    w.selector += part->second ? 'b' : 'a';
  }
  return w;
}

VerificationReport verify_jfamily_witness(const Graph& host, const EdgeMask& removed, Vertex a, Vertex b,
                                          const JFamilyWitness& w) {
  VerificationReport report("jfamily-witness");
  if (w.selector.size() != 6) {
    report.fail("selector has length " + std::to_string(w.selector.size()));
    return report;
  }
  std::vector<Vertex> used{a, b};
  if (!live(host, a, b, &removed)) report.fail("handle missing");
  for (std::size_t i = 0; i < 6; ++i) {
    const JCopy& p = w.parts[i];
    if ((w.selector[i] == 'b') != p.second) report.fail("selector disagrees with part " + std::to_string(i + 1));
    used.insert(used.end(), {p.c, p.d, p.e});
    std::vector<std::pair<Vertex, Vertex>> need{{a, p.c}, {b, p.c}, {a, p.e}, {b, p.e}, {p.c, p.d}, {p.d, p.e},
                                                {p.second ? b : a, p.d}};
    for (auto [u, v] : need)
      if (u < 0 || v < 0 || u >= host.vertex_count() || v >= host.vertex_count() || !live(host, u, v, &removed)) {
        report.fail("part " + std::to_string(i + 1) + " lacks an edge");
        break;
      }
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) report.fail("parts share vertices");
  if (!report) return report;
  auto lemma = verify_lemma1(w.selector);
  report.cases_examined = lemma.cases_examined;
  if (!lemma) report.fail("selector " + w.selector + ": " + lemma.counterexample);
  return report;
}

VerificationReport verify_lemma1(std::string_view selector) {
  auto [g, l] = build_lemma1_lists(selector);
  auto report = verify_witness_not_k_choosable(g, l, 3);
  report.check = "lemma1:" + std::string(selector);
  return report;
}

VerificationReport verify_lemma1_all(int workers) {
  std::vector<VerificationReport> results(64);
  detail::parallel_for(64, workers, [&](std::size_t i) {
    std::string sel;
    for (int bit = 5; bit >= 0; --bit) sel += ((i >> bit) & 1U) ? 'b' : 'a';
    results[i] = verify_lemma1(sel);
  });
  VerificationReport report("lemma1");
  for (const auto& r : results) {
    ++report.cases_examined;
    if (r) {
      ++report.tally["pass"];
    } else {
      report.fail(r.check + ": " + r.counterexample);
    }
  }
  return report;
}

VerificationReport verify_lemma2() {
  VerificationReport report("lemma2");
  Graph j3 = build_j3();
  const std::array<std::pair<const char*, const char*>, 12> free{{{"c", "d"},
                                                                  {"d", "e"},
                                                                  {"e", "f"},
                                                                  {"f", "g"},
                                                                  {"h", "d"},
                                                                  {"h", "e"},
                                                                  {"i", "e"},
                                                                  {"i", "f"},
                                                                  {"j", "d"},
                                                                  {"j", "e"},
                                                                  {"k", "e"},
                                                                  {"k", "f"}}};
  std::array<EdgeId, 12> ids{};
  for (std::size_t i = 0; i < free.size(); ++i)
    ids[i] = *j3.edge_id(j3.vertex(free[i].first), j3.vertex(free[i].second));
  Vertex a = j3.vertex("a");
  Vertex b = j3.vertex("b");
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < j3.vertex_count(); ++v)
    if (v != a && v != b) rest.push_back(v);

  for (unsigned mask = 0; mask < (1U << 12); ++mask) {
    std::vector<int> degree(static_cast<std::size_t>(j3.vertex_count()), 0);
    EdgeMask h(j3.edge_count());
    bool bounded = true;
    for (std::size_t i = 0; i < 12 && bounded; ++i) {
      if (!((mask >> i) & 1U)) continue;
      h.insert(ids[i]);
      for (Vertex v : {j3.edge(ids[i]).u, j3.edge(ids[i]).v})
        if (++degree[static_cast<std::size_t>(v)] > 3) bounded = false;
    }
    if (!bounded) continue;
    ++report.cases_examined;
    if (find_k4(j3, h)) {
      ++report.tally["k4"];
    } else if (auto jc = find_anchored_j(j3, a, b, rest, &h)) {
      ++report.tally[jc->second ? "j2" : "j1"];
    } else {
      report.fail("H = " + edge_list(j3, h) + " leaves neither K4 nor J1/J2");
    }
  }
  return report;
}

namespace {

// One way a single path p1-p2-p3-p4 of A can meet a star forest whose
// centres avoid x and y.
struct PathConfig {
  std::array<bool, 4> center{};
  std::array<bool, 3> edge{};   // path edge j (between positions j, j+1) in F
  std::array<bool, 4> bare{};   // centre without a leaf on the path
};

std::vector<PathConfig> path_configs() {
  std::vector<PathConfig> out;
  for (unsigned roles = 0; roles < 16; ++roles) {
    std::array<bool, 4> center{};
    for (std::size_t p = 0; p < 4; ++p) center[p] = (roles >> p) & 1U;
    // each non-centre picks: 0 none, 1 left centre, 2 right centre
    std::array<int, 4> pick{};
    while (true) {
      bool valid = true;
      for (std::size_t p = 0; p < 4 && valid; ++p) {
        if (center[p] && pick[p] != 0) valid = false;
        if (pick[p] == 1 && (p == 0 || !center[p - 1])) valid = false;
        if (pick[p] == 2 && (p == 3 || !center[p + 1])) valid = false;
      }
      if (valid) {
        PathConfig c;
        c.center = center;
        for (std::size_t p = 0; p < 4; ++p) {
          if (pick[p] == 1) c.edge[p - 1] = true;
          if (pick[p] == 2) c.edge[p] = true;
        }
        for (std::size_t p = 0; p < 4; ++p) {
          bool has_leaf = (p > 0 && pick[p - 1] == 2) || (p < 3 && pick[p + 1] == 1);
          c.bare[p] = center[p] && !has_leaf;
        }
        out.push_back(c);
      }
      std::size_t i = 0;
      while (i < 4 && ++pick[i] == 3) pick[i++] = 0;
      if (i == 4) break;
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_lemma6() {
  VerificationReport report("lemma6");
  Graph a = build_a();
  const Vertex x = a.vertex("x");
  const Vertex y = a.vertex("y");
  std::array<std::array<Vertex, 4>, 3> p{};
  std::array<std::array<EdgeId, 3>, 3> path_edge{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 4; ++j) p[i][j] = a.vertex("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    for (std::size_t j = 0; j < 3; ++j) path_edge[i][j] = *a.edge_id(p[i][j], p[i][j + 1]);
  }
  const auto configs = path_configs();
  EdgeMask f(a.edge_count());

  for (const auto& c0 : configs)
    for (const auto& c1 : configs)
      for (const auto& c2 : configs) {
        const std::array<const PathConfig*, 3> cfg{&c0, &c1, &c2};
        std::vector<Vertex> centers, bare;
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 4; ++j) {
            if (cfg[i]->center[j]) centers.push_back(p[i][j]);
            if (cfg[i]->bare[j]) bare.push_back(p[i][j]);
          }
        if (bare.size() > 2) continue;
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) {
            if (cfg[i]->edge[j])
              f.insert(path_edge[i][j]);
            else
              f.erase(path_edge[i][j]);
          }
        for (int xi = -1; xi < static_cast<int>(centers.size()); ++xi) {
          Vertex xc = xi < 0 ? -1 : centers[static_cast<std::size_t>(xi)];
          for (int yi = -1; yi < static_cast<int>(centers.size()); ++yi) {
            Vertex yc = yi < 0 ? -1 : centers[static_cast<std::size_t>(yi)];
            bool covered = std::all_of(bare.begin(), bare.end(), [&](Vertex v) { return v == xc || v == yc; });
            if (!covered) continue;
            ++report.cases_examined;
            std::optional<EdgeId> ex, ey;
            if (xc >= 0) f.insert(*(ex = a.edge_id(x, xc)));
            if (yc >= 0) f.insert(*(ey = a.edge_id(y, yc)));
            bool found = false;
            for (std::size_t i = 0; i < 3 && !found; ++i)
              for (std::size_t j = 0; j < 3 && !found; ++j) {
                const std::array<Vertex, 4> q{x, y, p[i][j], p[i][j + 1]};
                found = is_clique(a, q, &f);
              }
            if (!found) report.fail("star forest " + edge_list(a, f) + " leaves no K4");
            if (ex) f.erase(*ex);
            if (ey) f.erase(*ey);
          }
        }
      }
  report.tally["path_configurations"] = configs.size();
  return report;
}

bool theorem7_configuration_admissible(const Graph& d, std::span<const Vertex> centers, const EdgeMask& fd) {
  std::vector<char> is_center(static_cast<std::size_t>(d.vertex_count()), 0);
  for (Vertex c : centers) is_center[static_cast<std::size_t>(c)] = 1;
  std::vector<int> hits(static_cast<std::size_t>(d.vertex_count()), 0);
  for (EdgeId e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    bool cu = is_center[static_cast<std::size_t>(ed.u)];
    bool cv = is_center[static_cast<std::size_t>(ed.v)];
    if (!cu && !cv) return false;
    if (!fd.contains(e)) continue;
    if (cu == cv) return false;
    if (++hits[static_cast<std::size_t>(cu ? ed.v : ed.u)] > 1) return false;
  }
  return true;
}

VerificationReport verify_theorem7_core() {
  VerificationReport report("theorem7-core");
  Graph d = build_d();
  const int n = d.vertex_count();
  for (unsigned cset = 0; cset < (1U << n); ++cset) {
    auto in_c = [&](Vertex v) { return (cset >> v) & 1U; };
    bool covered = true;
    for (const Edge& e : d.edges())
      if (!in_c(e.u) && !in_c(e.v)) covered = false;
    if (!covered) {
      ++report.tally["center_sets_excluded"];
      continue;
    }
    ++report.tally["center_sets"];
    // every non-centre picks at most one edge to a centre
    std::vector<std::vector<EdgeId>> options;
    for (Vertex v = 0; v < n; ++v) {
      if (in_c(v)) continue;
      std::vector<EdgeId> opt{-1};
      auto nb = d.neighbors(v);
      auto ie = d.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (in_c(nb[i])) opt.push_back(ie[i]);
      options.push_back(std::move(opt));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      EdgeMask fd(d.edge_count());
      for (std::size_t i = 0; i < options.size(); ++i)
        if (options[i][pick[i]] >= 0) fd.insert(options[i][pick[i]]);
      ++report.cases_examined;
      if (!find_k4(d, fd)) {
        std::string cs;
        for (Vertex v = 0; v < n; ++v)
          if (in_c(v)) cs += (cs.empty() ? "" : ",") + d.name(v);
        report.fail("C = {" + cs + "}, F_D = " + edge_list(d, fd) + " leaves no K4");
      }
      std::size_t i = 0;
      while (i < options.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
      if (i == options.size()) break;
    }
  }
  return report;
}

SampleTarget parse_sample_target(std::string_view name) {
  if (name == "theorem2") return SampleTarget::Theorem2;
  if (name == "theorem7") return SampleTarget::Theorem7;
  if (name == "corollary3") return SampleTarget::Corollary3;
  throw Error(ErrorCode::BadParameters, "unknown sampling target '" + std::string(name) + "'");
}

EdgeMask random_bounded_degree_subgraph(const Graph& g, int max_degree, Rng& rng, const EdgeMask* skip,
                                        const EdgeMask* prefer) {
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!skip || !skip->contains(e)) order.push_back(e);
  rng.shuffle(order);
  if (prefer) std::stable_partition(order.begin(), order.end(), [&](EdgeId e) { return prefer->contains(e); });
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
  EdgeMask h(g.edge_count());
  for (EdgeId e : order) {
    auto u = static_cast<std::size_t>(g.edge(e).u);
    auto v = static_cast<std::size_t>(g.edge(e).v);
    if (degree[u] >= max_degree || degree[v] >= max_degree) continue;
    ++degree[u];
    ++degree[v];
    h.insert(e);
  }
  return h;
}

StarForest random_star_forest(const Graph& g, Rng& rng) {
  const double p_center = 0.2 + 0.6 * rng.uniform();
  const double p_take = 0.3 + 0.7 * rng.uniform();
  std::vector<char> center(static_cast<std::size_t>(g.vertex_count()));
  for (auto& c : center) c = rng.bernoulli(p_center);
  std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
  rng.shuffle(order);
  std::vector<char> leaf_used(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<char> has_leaf(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<EdgeId> edges;
  for (EdgeId e : order) {
    auto u = static_cast<std::size_t>(g.edge(e).u);
    auto v = static_cast<std::size_t>(g.edge(e).v);
    if (center[u] == center[v]) continue;
    std::size_t leaf = center[u] ? v : u;
    if (leaf_used[leaf] || !rng.bernoulli(p_take)) continue;
    leaf_used[leaf] = 1;
    has_leaf[center[u] ? u : v] = 1;
    edges.push_back(e);
  }
  std::vector<Vertex> centers;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (has_leaf[static_cast<std::size_t>(v)]) centers.push_back(v);
  return StarForest(g, std::move(edges), std::move(centers));
}

namespace {

struct SampleOutcome {
  bool pass = true;
  std::string detail;
  std::string kind;
};

SampleOutcome judge_obstruction(const Graph& host, const SLayout& s, const EdgeMask& h_local, const EdgeMask& h_full) {
  SampleOutcome out;
  Obstruction ob = extract_obstruction(host, s, h_local);
  if (auto* k4 = std::get_if<K4Witness>(&ob)) {
    out.kind = "k4";
    if (!is_clique(host, k4->vertices, &h_full)) {
      out.pass = false;
      out.detail = "returned K4 does not survive";
    }
  } else {
    const auto& w = std::get<JFamilyWitness>(ob);
    out.kind = "jfamily";
    auto rep = verify_jfamily_witness(host, h_full, s.a, s.b, w);
    if (!rep) {
      out.pass = false;
      out.detail = rep.counterexample;
    }
  }
  return out;
}

// The c-d-e-f-g path of every J3 copy. Taking all of them first kills every
// K4 of those copies, which steers samples towards J-family obstructions.
EdgeMask path_edges(const Graph& host, std::span<const SLayout> layouts) {
  EdgeMask mask(host.edge_count());
  for (const SLayout& l : layouts)
    for (const auto& roles : l.copies)
      for (std::size_t r = 0; r + 1 < 5; ++r)
        if (auto e = host.edge_id(roles[r], roles[r + 1])) mask.insert(*e);
  return mask;
}

}  // namespace

VerificationReport verify_sampled(SampleTarget target, std::uint64_t samples, Seed seed, int workers) {
  const char* names[] = {"theorem2", "theorem7", "corollary3"};
  VerificationReport report(std::string("sampled:") + names[static_cast<int>(target)]);
  report.seed = seed.value;
  if (samples == 0) {
    report.notes.push_back("no samples requested; the verdict is vacuous");
    return report;
  }
  const Rng root(seed);
  std::vector<SampleOutcome> outcomes(samples);

  if (target == SampleTarget::Theorem7) {
    Graph g2 = build_g2();
    detail::parallel_for(samples, workers, [&](std::size_t i) {
      Rng rng = root.split(i);
      StarForest f = random_star_forest(g2, rng);
      auto& out = outcomes[i];
      out.kind = "k4";
      if (!find_k4(g2, f.mask(g2))) {
        out.pass = false;
        out.detail = "star forest " + edge_list(g2, f.mask(g2)) + " leaves no K4";
      }
    });
  } else if (target == SampleTarget::Corollary3) {
    Graph s = build_s();
    SLayout layout = s_layout(s, "", "a", "b");
    EdgeMask skip(s.edge_count());
    for (EdgeId e = 0; e < s.edge_count(); ++e) {
      const Edge& ed = s.edge(e);
      if (ed.u == layout.a || ed.v == layout.a) skip.insert(e);
    }
    EdgeMask prefer = path_edges(s, {&layout, 1});
    detail::parallel_for(samples, workers, [&](std::size_t i) {
      Rng rng = root.split(i);
      bool paths_first = rng.bernoulli(0.5);
      EdgeMask h = random_bounded_degree_subgraph(s, 3, rng, &skip, paths_first ? &prefer : nullptr);
      outcomes[i] = judge_obstruction(s, layout, h, h);
    });
  } else {
    Graph g1 = build_g1();
    const Vertex c = g1.vertex("c");
    std::array<SLayout, 4> layouts;
    std::vector<int> owner(static_cast<std::size_t>(g1.vertex_count()), -1);
    for (int k = 0; k < 4; ++k) {
      auto prefix = "S" + std::to_string(k + 1) + ":";
      layouts[static_cast<std::size_t>(k)] = s_layout(g1, prefix, "c", "v" + std::to_string(k + 1));
      for (Vertex v = 0; v < g1.vertex_count(); ++v)
        if (g1.name(v).rfind(prefix, 0) == 0) owner[static_cast<std::size_t>(v)] = k;
      owner[static_cast<std::size_t>(layouts[static_cast<std::size_t>(k)].b)] = k;
    }
    EdgeMask prefer = path_edges(g1, layouts);
    detail::parallel_for(samples, workers, [&](std::size_t i) {
      Rng rng = root.split(i);
      bool paths_first = rng.bernoulli(0.5);
      EdgeMask h = random_bounded_degree_subgraph(g1, 3, rng, nullptr, paths_first ? &prefer : nullptr);
      std::array<bool, 4> touched{};
      auto nb = g1.neighbors(c);
      auto ie = g1.incident_edges(c);
      for (std::size_t j = 0; j < nb.size(); ++j)
        if (h.contains(ie[j])) touched[static_cast<std::size_t>(owner[static_cast<std::size_t>(nb[j])])] = true;
      int k = 0;
      while (k < 4 && touched[static_cast<std::size_t>(k)]) ++k;
      auto& out = outcomes[i];
      if (k == 4) {
        out.pass = false;
        out.detail = "every copy of S meets H at c";
        return;
      }
      EdgeMask local(g1.edge_count());
      for (EdgeId e : h.members()) {
        const Edge& ed = g1.edge(e);
        int ou = ed.u == c ? k : owner[static_cast<std::size_t>(ed.u)];
        int ov = ed.v == c ? k : owner[static_cast<std::size_t>(ed.v)];
        if (ou == k && ov == k) local.insert(e);
      }
      out = judge_obstruction(g1, layouts[static_cast<std::size_t>(k)], local, h);
      out.kind += ":S" + std::to_string(k + 1);
    });
  }

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    ++report.cases_examined;
    const auto& o = outcomes[i];
    ++report.tally[o.kind.substr(0, o.kind.find(':'))];
    if (!o.pass) report.fail("sample " + std::to_string(i) + ": " + o.detail);
  }
  return report;
}

}  // namespace atplanar
