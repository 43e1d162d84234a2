#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "atplanar/choosability.hpp"
#include "atplanar/decomposer.hpp"
#include "atplanar/graph.hpp"
#include "atplanar/plane_graph.hpp"
#include "atplanar/report.hpp"

namespace atplanar {

// {"vertices":[...], "edges":[[u,v],...], "rotation":{v:[...]}, "outer_face":[...]}
// "rotation" and "outer_face" are optional; when a rotation is present the
// document also yields a PlaneGraph.
struct GraphDocument {
  Graph graph;
  std::optional<PlaneGraph> plane;
};

// Throws Error{ParseError} for malformed documents, plus every error the
// Graph and PlaneGraph constructors raise.
GraphDocument parse_graph_json(std::string_view text);

// Compact and byte-deterministic: sorted vertices and edges; rotations start
// at the smallest neighbour; the outer face in traced direction from its
// least rotation.
std::string graph_to_json(const Graph& g);
std::string plane_graph_to_json(const PlaneGraph& pg);

// {"handle":[x,y], "forest":[[u,v],...], "arcs":[[tail,head],...], "trace":...}
// Trace nodes: {"case":"base","triangle":[x,y,t]},
// {"case":"chord","chord":[u,v],"keep":...,"split":...},
// {"case":"ear","z":z,"w":w,"rest":...}. Written without recursion, so
// traces as deep as the input stays safe.
std::string decomposition_to_json(const PlaneGraph& pg, const Decomposition& d);
Decomposition parse_decomposition_json(const PlaneGraph& pg, std::string_view text);

// {"forest":[[u,v],...], "arcs":[[tail,head],...]}
std::string forest_certificate_to_json(const Graph& g, const ForestCertificate& c);

// {"arcs":[[tail,head],...], "max_out_degree":k}
std::string orientation_to_json(const Graph& g, const Orientation& d);

// {"coloring": {v: colour}}
std::string coloring_to_json(const Graph& g, const ListAssignment& l, const Coloring& c);

// {"lists": {v: [colour,...]}}
std::string list_assignment_to_json(const Graph& g, const ListAssignment& l);
ListAssignment parse_list_assignment_json(const Graph& g, std::string_view text);

// {"check", "verdict", "cases_examined", "counterexample"?, "seed"?, "tally", "notes"}
std::string report_to_json(const VerificationReport& r);

std::string graph_to_dot(const Graph& g);
// Forest edges bold, oriented edges drawn as arrows.
std::string decomposition_to_dot(const PlaneGraph& pg, const Decomposition& d);

}  // namespace atplanar
