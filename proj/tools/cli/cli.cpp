#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "atplanar/alon_tarsi.hpp"
#include "atplanar/choosability.hpp"
#include "atplanar/decomposer.hpp"
#include "atplanar/error.hpp"
#include "atplanar/gadgets.hpp"
#include "atplanar/io.hpp"
#include "atplanar/testkit/testkit.hpp"

namespace atplanar::cli {

namespace {

struct Options {
  bool json = false;
  std::string input = "-";
  std::string output = "-";
  std::string format = "json";

  std::string gadget;
  std::string selector;

  std::string handle;
  std::string check;
  bool any = false;

  std::string decomposition;
  std::string mode = "structural";
  std::string lemma;
  std::string target;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;

  std::string eta;
  int k = 0;
  std::string lists;

  int n = 0;
  int boundary = 3;
  double p = 0.5;

  EnumerationLimits limits;
};

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::BadParameters, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  void write(const std::string& path, const std::string& text) {
    if (path == "-") {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::BadParameters, "cannot write '" + path + "'");
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

std::string human(const VerificationReport& r) {
  std::ostringstream ss;
  ss << (r.pass ? "PASS " : "FAIL ") << r.check << " (cases examined: " << r.cases_examined << ")\n";
  if (!r.pass) ss << "  counterexample: " << r.counterexample << "\n";
  if (r.seed) ss << "  seed: " << *r.seed << "\n";
  for (const auto& [k, v] : r.tally) ss << "  " << k << ": " << v << "\n";
  for (const auto& note : r.notes) ss << "  note: " << note << "\n";
  return ss.str();
}

int emit_report(const Options& o, const VerificationReport& r, std::ostream& out) {
  if (o.json)
    out << report_to_json(r) << "\n";
  else
    out << human(r);
  return r.pass ? kSuccess : kVerificationFailed;
}

PlaneGraph require_plane(GraphDocument doc) {
  if (!doc.plane) throw Error(ErrorCode::InvalidEmbedding, "input has no rotation system");
  return std::move(*doc.plane);
}

std::pair<Vertex, Vertex> parse_handle(const Graph& g, const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::BadParameters, "--handle expects u,v");
  return {g.vertex(text.substr(0, comma)), g.vertex(text.substr(comma + 1))};
}

ExponentVector parse_eta(const Graph& g, const std::string& text) {
  ExponentVector eta(static_cast<std::size_t>(g.vertex_count()), 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw Error(ErrorCode::BadParameters, "--eta expects v:k entries");
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameters, "bad exponent in '" + item + "'");
    }
    eta[static_cast<std::size_t>(g.vertex(item.substr(0, colon)))] = value;
  }
  return eta;
}

int cmd_gadget(const Options& o, Io& io) {
  Graph g = build_gadget(parse_gadget_id(o.gadget, o.selector));
  io.write(o.output, o.format == "dot" ? graph_to_dot(g) : graph_to_json(g));
  return kSuccess;
}

int cmd_decompose(const Options& o, Io& io, std::ostream& err) {
  PlaneGraph pg = require_plane(parse_graph_json(io.read(o.input)));
  const Graph& g = pg.graph();
  if (o.any) {
    if (!o.handle.empty()) throw Error(ErrorCode::BadParameters, "--any picks its own handle");
    ForestCertificate cert = decompose_any_planar(pg);
    io.write(o.output, forest_certificate_to_json(g, cert));
    if (o.check.empty()) return kSuccess;
    auto report = verify_forest_certificate(g, cert);
    if (!report) err << human(report);
    return report.pass ? kSuccess : kVerificationFailed;
  }
  if (pg.outer_face().size() < 2) throw Error(ErrorCode::NotNearTriangulation, "outer face too short");
  auto [x, y] = o.handle.empty() ? std::pair{pg.outer_face()[0], pg.outer_face()[1]} : parse_handle(g, o.handle);
  Decomposition d = decompose(pg, x, y);
  io.write(o.output, o.format == "dot" ? decomposition_to_dot(pg, d) : decomposition_to_json(pg, d));
  if (o.check.empty()) return kSuccess;
  auto report = verify_decomposition(pg, d, o.check == "parity" ? VerifyMode::Parity : VerifyMode::Structural, o.limits);
  if (!report) err << human(report);
  return report.pass ? kSuccess : kVerificationFailed;
}

int cmd_verify_decomposition(const Options& o, Io& io, std::ostream& out) {
  PlaneGraph pg = require_plane(parse_graph_json(io.read(o.input)));
  Decomposition d = parse_decomposition_json(pg, io.read(o.decomposition));
  auto mode = o.mode == "parity" ? VerifyMode::Parity : VerifyMode::Structural;
  return emit_report(o, verify_decomposition(pg, d, mode, o.limits), out);
}

int cmd_verify_lemma(const Options& o, std::ostream& out) {
  if (o.lemma != "lemma1" && !o.selector.empty())
    throw Error(ErrorCode::BadParameters, "--selector applies to lemma1 only");
  if (o.lemma == "lemma1")
    return emit_report(o, o.selector.empty() ? verify_lemma1_all(o.workers) : verify_lemma1(o.selector), out);
  if (o.lemma == "lemma2") return emit_report(o, verify_lemma2(), out);
  if (o.lemma == "lemma6") return emit_report(o, verify_lemma6(), out);
  if (o.lemma == "theorem7-core") return emit_report(o, verify_theorem7_core(), out);
  throw Error(ErrorCode::BadParameters, "unknown lemma '" + o.lemma + "'");
}

int cmd_verify_sampled(const Options& o, std::ostream& out) {
  auto report = verify_sampled(parse_sample_target(o.target), o.samples, Seed{o.seed}, o.workers);
  return emit_report(o, report, out);
}

int cmd_at_number(const Options& o, Io& io, std::ostream& out) {
  Graph g = parse_graph_json(io.read(o.input)).graph;
  out << at_number(g, o.limits) << "\n";
  return kSuccess;
}

int cmd_at_coefficient(const Options& o, Io& io, std::ostream& out) {
  Graph g = parse_graph_json(io.read(o.input)).graph;
  out << poly_coefficient(g, parse_eta(g, o.eta), o.limits) << "\n";
  return kSuccess;
}

int cmd_at_orientation(const Options& o, Io& io, std::ostream& out) {
  Graph g = parse_graph_json(io.read(o.input)).graph;
  auto d = find_at_orientation(g, o.k, o.limits);
  if (!d) {
    out << (o.json ? "null" : "none") << "\n";
    return kVerificationFailed;
  }
  io.write(o.output, orientation_to_json(g, *d));
  return kSuccess;
}

int cmd_choose(const Options& o, Io& io, std::ostream& out) {
  Graph g = parse_graph_json(io.read(o.input)).graph;
  ListAssignment l = parse_list_assignment_json(g, io.read(o.lists));
  if (o.k > 0) return emit_report(o, verify_witness_not_k_choosable(g, l, o.k), out);
  auto c = is_l_colorable(g, l);
  if (!c) {
    out << (o.json ? "null" : "not colourable") << "\n";
    return kVerificationFailed;
  }
  out << coloring_to_json(g, l, *c) << "\n";
  return kSuccess;
}

int cmd_gen_triangulation(const Options& o, Io& io) {
  io.write(o.output, plane_graph_to_json(testkit::random_near_triangulation(o.n, o.boundary, Seed{o.seed})));
  return kSuccess;
}

int cmd_gen_graph(const Options& o, Io& io) {
  io.write(o.output, graph_to_json(testkit::random_graph(o.n, o.p, Seed{o.seed})));
  return kSuccess;
}

void add_limits(CLI::App* app, Options& o) {
  app->add_option("--parity-cap", o.limits.parity_arc_cap, "Largest arc count for parity enumeration");
  app->add_option("--coefficient-cap", o.limits.coefficient_edge_cap, "Largest edge count for coefficients");
  app->add_option("--orientation-cap", o.limits.orientation_edge_cap, "Largest edge count for orientation search");
  app->add_option("--workers", o.limits.workers, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Planar forest decompositions, Alon-Tarsi certificates and gadget verification", "atplanar"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Machine-readable reports");

  auto* gadget = app.add_subcommand("gadget", "Gadget graphs");
  gadget->require_subcommand(1);
  auto* gadget_build = gadget->add_subcommand("build", "Emit a gadget graph");
  gadget_build->add_option("name", o.gadget, "J1 J2 JFamily J3 S G1 A D G2")->required();
  gadget_build->add_option("--selector", o.selector, "Six letters over {a,b} for JFamily");
  gadget_build->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  gadget_build->add_option("--output", o.output);

  auto* decomp = app.add_subcommand("decompose", "Forest plus nice orientation of a near-triangulation");
  decomp->add_option("--input", o.input)->required();
  decomp->add_option("--handle", o.handle, "Boundary edge u,v");
  decomp->add_option("--check", o.check)->check(CLI::IsMember({"structural", "parity"}));
  decomp->add_flag("--any", o.any, "Accept any connected plane graph (augment, then restrict)");
  decomp->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  decomp->add_option("--output", o.output);
  add_limits(decomp, o);

  auto* verify = app.add_subcommand("verify", "Certificate and lemma verification");
  verify->require_subcommand(1);
  auto* v_dec = verify->add_subcommand("decomposition", "Check a decomposition document");
  v_dec->add_option("--input", o.input)->required();
  v_dec->add_option("--decomposition", o.decomposition)->required();
  v_dec->add_option("--mode", o.mode)->check(CLI::IsMember({"structural", "parity"}));
  add_limits(v_dec, o);
  auto* v_lemma = verify->add_subcommand("lemma", "Exhaustive gadget verification");
  v_lemma->add_option("--name", o.lemma, "lemma1 lemma2 lemma6 theorem7-core")->required();
  v_lemma->add_option("--selector", o.selector);
  v_lemma->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
  auto* v_sampled = verify->add_subcommand("sampled", "Seeded sampling over the large gadgets");
  v_sampled->add_option("--target", o.target, "theorem2 theorem7 corollary3")->required();
  v_sampled->add_option("--samples", o.samples)->required();
  v_sampled->add_option("--seed", o.seed)->required();
  v_sampled->add_option("--workers", o.workers)->check(CLI::PositiveNumber);

  auto* at = app.add_subcommand("at", "Alon-Tarsi quantities");
  at->require_subcommand(1);
  auto* at_num = at->add_subcommand("number", "Exact Alon-Tarsi number");
  at_num->add_option("--input", o.input)->required();
  add_limits(at_num, o);
  auto* at_coef = at->add_subcommand("coefficient", "Graph polynomial coefficient");
  at_coef->add_option("--input", o.input)->required();
  at_coef->add_option("--eta", o.eta, "Exponents v:k,... (missing vertices are 0)")->required();
  add_limits(at_coef, o);
  auto* at_or = at->add_subcommand("orientation", "First Alon-Tarsi orientation with out-degrees below k");
  at_or->add_option("--input", o.input)->required();
  at_or->add_option("--k", o.k)->required();
  at_or->add_option("--output", o.output);
  add_limits(at_or, o);

  auto* choose = app.add_subcommand("choose", "List colouring");
  choose->require_subcommand(1);
  auto* choose_check = choose->add_subcommand("check", "Find an L-colouring, or verify a non-choosability witness");
  choose_check->add_option("--input", o.input)->required();
  choose_check->add_option("--lists", o.lists)->required();
  choose_check->add_option("--k", o.k, "Require lists of size k and no colouring");

  auto* gen = app.add_subcommand("gen", "Seeded generators");
  gen->require_subcommand(1);
  auto* gen_tri = gen->add_subcommand("triangulation", "Random near-triangulation");
  gen_tri->add_option("--n", o.n)->required();
  gen_tri->add_option("--boundary", o.boundary)->required();
  gen_tri->add_option("--seed", o.seed)->required();
  gen_tri->add_option("--output", o.output);
  auto* gen_graph = gen->add_subcommand("graph", "Random graph");
  gen_graph->add_option("--n", o.n)->required();
  gen_graph->add_option("--p", o.p)->required();
  gen_graph->add_option("--seed", o.seed)->required();
  gen_graph->add_option("--output", o.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  Io io(in, out);
  try {
    if (gadget_build->parsed()) return cmd_gadget(o, io);
    if (decomp->parsed()) return cmd_decompose(o, io, err);
    if (v_dec->parsed()) return cmd_verify_decomposition(o, io, out);
    if (v_lemma->parsed()) return cmd_verify_lemma(o, out);
    if (v_sampled->parsed()) return cmd_verify_sampled(o, out);
    if (at_num->parsed()) return cmd_at_number(o, io, out);
    if (at_coef->parsed()) return cmd_at_coefficient(o, io, out);
    if (at_or->parsed()) return cmd_at_orientation(o, io, out);
    if (choose_check->parsed()) return cmd_choose(o, io, out);
    if (gen_tri->parsed()) return cmd_gen_triangulation(o, io);
    if (gen_graph->parsed()) return cmd_gen_graph(o, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_cap_overrun() ? kCapExceeded : kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "no command\n";
  return kUsageError;
}

}  // namespace atplanar::cli
