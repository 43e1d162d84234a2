#include "atplanar/io.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "atplanar/error.hpp"
#include "json.hpp"

namespace atplanar {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

const std::string& text_of(const json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a string");
  return v.get_ref<const std::string&>();
}

std::vector<std::string> strings(const json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : v) out.push_back(text_of(item, what));
  return out;
}

std::pair<std::string, std::string> pair_of(const json& v, const char* what) {
  auto items = strings(v, what);
  if (items.size() != 2) throw Error(ErrorCode::ParseError, std::string(what) + " must have two entries");
  return {items[0], items[1]};
}

std::string quote(const std::string& s) { return json(s).dump(); }

ordered_json name_pair(const Graph& g, Vertex a, Vertex b) { return ordered_json::array({g.name(a), g.name(b)}); }

ordered_json arc_list(const Graph& g, const Orientation& d) {
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : d.arcs()) arcs.push_back(name_pair(g, a.tail, a.head));
  return arcs;
}

ordered_json graph_fields(const Graph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const auto& v : g.names()) doc["vertices"].push_back(v);
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back(name_pair(g, e.u, e.v));
  return doc;
}

EdgeId edge_between(const Graph& g, const std::pair<std::string, std::string>& p) {
  auto e = g.edge_id(g.vertex(p.first), g.vertex(p.second));
  if (!e) throw Error(ErrorCode::ParseError, p.first + "-" + p.second + " is not an edge");
  return *e;
}

}  // namespace

GraphDocument parse_graph_json(std::string_view text) {
  json doc = parse(text);
  auto vertices = strings(field(doc, "vertices"), "vertices");
  std::vector<std::pair<std::string, std::string>> edges;
  const json& ej = field(doc, "edges");
  if (!ej.is_array()) throw Error(ErrorCode::ParseError, "edges must be an array");
  for (const auto& e : ej) edges.push_back(pair_of(e, "edge"));
  GraphDocument out{Graph(vertices, edges), std::nullopt};
  if (doc.contains("rotation")) {
    const json& rj = doc["rotation"];
    if (!rj.is_object()) throw Error(ErrorCode::ParseError, "rotation must be an object");
    std::map<std::string, std::vector<std::string>> rotation;
    for (auto it = rj.begin(); it != rj.end(); ++it) rotation[it.key()] = strings(it.value(), "rotation entry");
    std::vector<std::string> outer;
    if (doc.contains("outer_face")) outer = strings(doc["outer_face"], "outer_face");
    out.plane = build_plane_graph(vertices, edges, rotation, outer);
  }
  return out;
}

std::string graph_to_json(const Graph& g) { return graph_fields(g).dump(); }

std::string plane_graph_to_json(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  ordered_json doc = graph_fields(g);
  ordered_json rot = ordered_json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ordered_json list = ordered_json::array();
    for (Vertex w : pg.rotation(v)) list.push_back(g.name(w));
    rot[g.name(v)] = std::move(list);
  }
  doc["rotation"] = std::move(rot);
  doc["outer_face"] = ordered_json::array();
  for (Vertex v : pg.outer_face()) doc["outer_face"].push_back(g.name(v));
  return doc.dump();
}

std::string decomposition_to_json(const PlaneGraph& pg, const Decomposition& d) {
  const Graph& g = pg.graph();
  std::string out = "{\"handle\":" + name_pair(g, d.handle_x, d.handle_y).dump();
  ordered_json forest = ordered_json::array();
  for (EdgeId e : d.forest) forest.push_back(name_pair(g, g.edge(e).u, g.edge(e).v));
  out += ",\"forest\":" + forest.dump();
  out += ",\"arcs\":" + arc_list(g, d.orientation).dump();
  out += ",\"trace\":";
  if (d.trace.empty()) {
    out += "null";
  } else {
    // Work items: a node index to expand, or literal text.
    std::vector<std::variant<int, std::string>> work{d.trace.root};
    while (!work.empty()) {
      auto item = std::move(work.back());
      work.pop_back();
      if (auto* lit = std::get_if<std::string>(&item)) {
        out += *lit;
        continue;
      }
      const TraceNode& t = d.trace.nodes[static_cast<std::size_t>(std::get<int>(item))];
      auto name = [&](int i) { return quote(g.name(t.vertices[static_cast<std::size_t>(i)])); };
      switch (t.kind) {
        case TraceKind::Base:
          out += "{\"case\":\"base\",\"triangle\":[" + name(0) + "," + name(1) + "," + name(2) + "]}";
          break;
        case TraceKind::Chord:
          out += "{\"case\":\"chord\",\"chord\":[" + name(0) + "," + name(1) + "],\"keep\":";
          work.emplace_back(std::string("}"));
          work.emplace_back(t.children[1]);
          work.emplace_back(std::string(",\"split\":"));
          work.emplace_back(t.children[0]);
          break;
        case TraceKind::Ear:
          out += "{\"case\":\"ear\",\"z\":" + name(0) + ",\"w\":" + name(1) + ",\"rest\":";
          work.emplace_back(std::string("}"));
          work.emplace_back(t.children[0]);
          break;
      }
    }
  }
  out += "}";
  return out;
}

Decomposition parse_decomposition_json(const PlaneGraph& pg, std::string_view text) {
  const Graph& g = pg.graph();
  json doc = parse(text);
  Decomposition d;
  auto handle = pair_of(field(doc, "handle"), "handle");
  d.handle_x = g.vertex(handle.first);
  d.handle_y = g.vertex(handle.second);
  const json& fj = field(doc, "forest");
  if (!fj.is_array()) throw Error(ErrorCode::ParseError, "forest must be an array");
  for (const auto& e : fj) d.forest.push_back(edge_between(g, pair_of(e, "forest edge")));
  std::sort(d.forest.begin(), d.forest.end());
  const json& aj = field(doc, "arcs");
  if (!aj.is_array()) throw Error(ErrorCode::ParseError, "arcs must be an array");
  std::vector<Arc> arcs;
  for (const auto& a : aj) {
    auto p = pair_of(a, "arc");
    arcs.push_back({g.vertex(p.first), g.vertex(p.second), edge_between(g, p)});
  }
  d.orientation = Orientation(g, std::move(arcs));

  const json& tj = field(doc, "trace");
  // Preorder, keep before split: the order decompose creates nodes in.
  struct Pending {
    const json* node;
    int parent;
    int slot;
  };
  std::vector<Pending> stack{{&tj, -1, 0}};
  while (!stack.empty()) {
    Pending p = stack.back();
    stack.pop_back();
    const json& n = *p.node;
    const std::string& kind = text_of(field(n, "case"), "case");
    TraceNode t;
    int id = static_cast<int>(d.trace.nodes.size());
    if (kind == "base") {
      auto tri = strings(field(n, "triangle"), "triangle");
      if (tri.size() != 3) throw Error(ErrorCode::ParseError, "triangle must have three entries");
      t.kind = TraceKind::Base;
      for (std::size_t i = 0; i < 3; ++i) t.vertices[i] = g.vertex(tri[i]);
    } else if (kind == "chord") {
      auto c = pair_of(field(n, "chord"), "chord");
      t.kind = TraceKind::Chord;
      t.vertices = {g.vertex(c.first), g.vertex(c.second), -1};
      t.children.assign(2, -1);
      stack.push_back({&field(n, "split"), id, 1});
      stack.push_back({&field(n, "keep"), id, 0});
    } else if (kind == "ear") {
      t.kind = TraceKind::Ear;
      t.vertices = {g.vertex(text_of(field(n, "z"), "z")), g.vertex(text_of(field(n, "w"), "w")), -1};
      t.children.assign(1, -1);
      stack.push_back({&field(n, "rest"), id, 0});
    } else {
      throw Error(ErrorCode::ParseError, "unknown trace case '" + kind + "'");
    }
    d.trace.nodes.push_back(std::move(t));
    if (p.parent < 0)
      d.trace.root = id;
    else
      d.trace.nodes[static_cast<std::size_t>(p.parent)].children[static_cast<std::size_t>(p.slot)] = id;
  }
  return d;
}

std::string forest_certificate_to_json(const Graph& g, const ForestCertificate& c) {
  ordered_json doc;
  doc["forest"] = ordered_json::array();
  for (EdgeId e : c.forest) doc["forest"].push_back(name_pair(g, g.edge(e).u, g.edge(e).v));
  doc["arcs"] = arc_list(g, c.orientation);
  return doc.dump();
}

std::string orientation_to_json(const Graph& g, const Orientation& d) {
  ordered_json doc;
  doc["arcs"] = arc_list(g, d);
  doc["max_out_degree"] = d.max_out_degree();
  return doc.dump();
}

std::string coloring_to_json(const Graph& g, const ListAssignment& l, const Coloring& c) {
  ordered_json colors = ordered_json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) colors[g.name(v)] = l.color_name(c[static_cast<std::size_t>(v)]);
  ordered_json doc;
  doc["coloring"] = std::move(colors);
  return doc.dump();
}

std::string list_assignment_to_json(const Graph& g, const ListAssignment& l) {
  ordered_json lists = ordered_json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ordered_json colors = ordered_json::array();
    for (int c : l.list(v)) colors.push_back(l.color_name(c));
    lists[g.name(v)] = std::move(colors);
  }
  ordered_json doc;
  doc["lists"] = std::move(lists);
  return doc.dump();
}

ListAssignment parse_list_assignment_json(const Graph& g, std::string_view text) {
  json doc = parse(text);
  const json& lj = field(doc, "lists");
  if (!lj.is_object()) throw Error(ErrorCode::ParseError, "lists must be an object");
  std::map<std::string, std::vector<std::string>> lists;
  for (auto it = lj.begin(); it != lj.end(); ++it) lists[it.key()] = strings(it.value(), "list");
  return ListAssignment(g, lists);
}

std::string report_to_json(const VerificationReport& r) {
  ordered_json doc;
  doc["check"] = r.check;
  doc["verdict"] = r.pass ? "PASS" : "FAIL";
  doc["cases_examined"] = r.cases_examined;
  if (!r.pass) doc["counterexample"] = r.counterexample;
  if (r.seed) doc["seed"] = *r.seed;
  doc["tally"] = ordered_json::object();
  for (const auto& [k, v] : r.tally) doc["tally"][k] = v;
  doc["notes"] = r.notes;
  return doc.dump();
}

std::string graph_to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& v : g.names()) out += "  " + quote(v) + ";\n";
  for (const Edge& e : g.edges()) out += "  " + quote(g.name(e.u)) + " -- " + quote(g.name(e.v)) + ";\n";
  out += "}\n";
  return out;
}

std::string decomposition_to_dot(const PlaneGraph& pg, const Decomposition& d) {
  const Graph& g = pg.graph();
  std::vector<int> arc_of(static_cast<std::size_t>(g.edge_count()), -1);
  for (std::size_t i = 0; i < d.orientation.arcs().size(); ++i)
    arc_of[static_cast<std::size_t>(d.orientation.arcs()[i].edge)] = static_cast<int>(i);
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  " + quote(g.name(v));
    if (v == d.handle_x || v == d.handle_y) out += " [shape=box]";
    out += ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int a = arc_of[static_cast<std::size_t>(e)];
    if (a >= 0) {
      const Arc& arc = d.orientation.arcs()[static_cast<std::size_t>(a)];
      out += "  " + quote(g.name(arc.tail)) + " -- " + quote(g.name(arc.head)) + " [dir=forward];\n";
    } else {
      out += "  " + quote(g.name(g.edge(e).u)) + " -- " + quote(g.name(g.edge(e).v)) + " [style=bold];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace atplanar
