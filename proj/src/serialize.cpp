#include "hgrig/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "hgrig/error.hpp"

namespace hgrig {

namespace {

// Missing keys and wrong value types surface as ValidationError.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed document: ") + e.what());
  }
}


json schema_header(const char* kind) { return json{{"schema", 1}, {"kind", kind}}; }

void expect_kind(const json& j, const char* kind) {
  check_schema(j);
  if (j.value("kind", "") != kind) throw ValidationError(std::string("expected a ") + kind + " document");
}

Label label_from(const std::string& text) {
  if (text == "a") return Label::a;
  if (text == "t") return Label::t;
  throw ValidationError("unknown line label '" + text + "'");
}

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void check_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema")) throw ValidationError("document has no schema field");
  if (j.at("schema") != 1) throw ValidationError("unsupported schema version " + j.at("schema").dump());
}

json to_json(const BsParams& params) { return json{{"m", params.m}, {"n", params.n}}; }

static BsParams params_from_json_impl(const json& j) {
  return make_params(j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>());
}

json to_json(const BsElement& x) {
  json syllables = json::array();
  for (const Syllable& s : x.syllables()) syllables.push_back(json::array({to_decimal(s.exponent), s.sign}));
  return json{{"syllables", syllables}, {"tail", to_decimal(x.tail())}, {"word", to_string(x)}};
}

static BsElement element_from_json_impl(const BsParams& params, const json& j) {
  std::vector<Syllable> syllables;
  for (const json& s : j.at("syllables")) {
    syllables.push_back({from_decimal(s.at(0).get<std::string>()), s.at(1).get<int>()});
  }
  return BsElement::from_normal_form(params, std::move(syllables), from_decimal(j.at("tail").get<std::string>()));
}

json to_json(const StandardLine& line) {
  return json{{"label", std::string(1, label_char(line.label))}, {"rep", to_json(line.rep)}, {"truncated", line.truncated}};
}

static StandardLine line_from_json_impl(const BsParams& params, const json& j) {
  StandardLine line{label_from(j.at("label").get<std::string>()), element_from_json(params, j.at("rep")),
                    j.value("truncated", false)};
  if (!(line_of(line.rep, line.label) == line)) throw ValidationError("line representative is not canonical");
  return line;
}

json to_json(const TreeVertex& vertex) {
  json address = json::array();
  for (const auto& [exponent, sign] : vertex.address) address.push_back(json::array({exponent, sign}));
  return address;
}

static TreeVertex tree_vertex_from_json_impl(const json& j) {
  TreeVertex vertex;
  for (const json& step : j) vertex.address.emplace_back(step.at(0).get<std::int64_t>(), step.at(1).get<int>());
  return vertex;
}

json to_json(const CayleyBall& ball) {
  json j = schema_header("cayley_ball");
  j["params"] = to_json(ball.params());
  j["radius"] = ball.radius();
  json vertices = json::array();
  for (std::size_t v = 0; v < ball.size(); ++v) {
    json entry = to_json(ball.vertices()[v]);
    entry["depth"] = ball.depth()[v];
    vertices.push_back(std::move(entry));
  }
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const CayleyEdge& e : ball.edges()) {
    edges.push_back(json::array({e.source, e.target, std::string(1, label_char(e.label))}));
  }
  j["edges"] = std::move(edges);
  return j;
}

static CayleyBall cayley_ball_from_json_impl(const json& j) {
  expect_kind(j, "cayley_ball");
  const BsParams params = params_from_json(j.at("params"));
  CayleyBall ball(params, j.at("radius").get<int>());
  for (const json& entry : j.at("vertices")) ball.add_vertex(element_from_json(params, entry), entry.at("depth").get<int>());
  ball.rebuild_edges();
  std::vector<CayleyEdge> edges;
  for (const json& e : j.at("edges")) {
    edges.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>(), label_from(e.at(2).get<std::string>())});
  }
  if (edges != ball.edges()) throw ValidationError("edge list does not match the vertex set");
  return ball;
}

json to_json(const LambdaGraph& graph) {
  json j = schema_header("lambda_graph");
  j["ball"] = to_json(graph.ball());
  json nodes = json::array();
  for (const StandardLine& line : graph.nodes()) nodes.push_back(to_json(line));
  j["nodes"] = std::move(nodes);
  json links = json::array();
  for (const LambdaLink& link : graph.links()) {
    links.push_back(json::array({link.a_node, link.t_node, link.vertex, graph.t_offset(link.vertex)}));
  }
  j["links"] = std::move(links);
  return j;
}

static LambdaGraph lambda_graph_from_json_impl(const json& j) {
  expect_kind(j, "lambda_graph");
  LambdaGraph graph(cayley_ball_from_json(j.at("ball")));
  const BsParams& params = graph.params();
  for (const json& node : j.at("nodes")) {
    StandardLine line = line_from_json(params, node);
    const bool truncated = line.truncated;
    const std::uint32_t id = graph.add_node(std::move(line));
    if (truncated) graph.mark_truncated(id);
  }
  for (const json& link : j.at("links")) {
    graph.add_link({link.at(0).get<std::uint32_t>(), link.at(1).get<std::uint32_t>(), link.at(2).get<std::uint32_t>()},
                   link.at(3).get<std::int64_t>());
  }
  graph.finalize();
  return graph;
}

json to_json(const GapReport& report) {
  json j = schema_header("gap_report");
  j["d"] = report.d;
  j["direction"] = report.direction;
  j["measured_gap"] = to_decimal(report.measured_gap);
  j["formula_gap"] = to_decimal(report.formula_gap);
  j["samples"] = report.samples;
  j["equally_spaced"] = report.equally_spaced;
  j["passed"] = report.passed();
  return j;
}

static GapReport gap_report_from_json_impl(const json& j) {
  expect_kind(j, "gap_report");
  GapReport report;
  report.d = j.at("d").get<std::size_t>();
  report.direction = j.at("direction").get<std::string>();
  report.measured_gap = from_decimal(j.at("measured_gap").get<std::string>());
  report.formula_gap = from_decimal(j.at("formula_gap").get<std::string>());
  report.samples = j.at("samples").get<std::size_t>();
  report.equally_spaced = j.at("equally_spaced").get<bool>();
  return report;
}

std::string to_dot(const CayleyBall& ball) {
  std::ostringstream out;
  out << "digraph cayley_ball {\n";
  for (std::size_t v = 0; v < ball.size(); ++v) {
    out << "  v" << v << " [label=" << dot_quote(to_string(ball.vertices()[v])) << "];\n";
  }
  for (const CayleyEdge& e : ball.edges()) {
    out << "  v" << e.source << " -> v" << e.target << " [label=\"" << label_char(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const LambdaGraph& graph) {
  std::ostringstream out;
  out << "graph lambda {\n";
  for (std::size_t node = 0; node < graph.nodes().size(); ++node) {
    const StandardLine& line = graph.nodes()[node];
    out << "  n" << node << " [label=" << dot_quote(std::string(1, label_char(line.label)) + ": " + to_string(line.rep))
        << ", shape=" << (line.label == Label::a ? "box" : "ellipse") << "];\n";
  }
  for (const LambdaLink& link : graph.links()) {
    out << "  n" << link.a_node << " -- n" << link.t_node << ";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Higman artifacts

json to_json(const Sigma& sigma) {
  json j = schema_header("sigma");
  j["sigma"] = to_string(sigma);
  j["k"] = sigma.k();
  return j;
}

static Sigma sigma_from_json_impl(const json& j) {
  expect_kind(j, "sigma");
  return parse_sigma(j.at("sigma").get<std::string>());
}

json to_json(const FSigma& f) {
  json j = schema_header("f_sigma");
  j["k"] = f.k;
  j["translations"] = f.translations;
  j["order"] = f.translations.size();
  return j;
}

static FSigma f_sigma_from_json_impl(const json& j) {
  expect_kind(j, "f_sigma");
  FSigma f{j.at("k").get<std::size_t>(), j.at("translations").get<std::vector<std::size_t>>()};
  if (!std::is_sorted(f.translations.begin(), f.translations.end())) throw ValidationError("translations must be sorted");
  return f;
}

namespace {

BsElement position_from_word(const BsParams& params, const std::string& word) {
  BsElement x = normalize(params, word);
  if (to_string(x) != word) throw ValidationError("chart position '" + word + "' is not a normal-form word");
  return x;
}

}  // namespace

json to_json(const DevelopedBall& ball) {
  json j = schema_header("developed_ball");
  j["sigma"] = to_string(ball.sigma());
  j["r"] = ball.r();
  j["s"] = ball.s();
  json vertices = json::array();
  for (const HigVertex& v : ball.vertices()) vertices.push_back({{"type", v.type}, {"interior", v.interior}});
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const HigEdge& e : ball.edges()) edges.push_back({{"type", e.type}, {"source", e.source}, {"target", e.target}});
  j["edges"] = std::move(edges);
  json cells = json::array();
  for (const HigCell& c : ball.cells()) {
    cells.push_back({{"vertices", c.vertices}, {"edges", c.edges}, {"level", c.level}, {"interior", c.interior}});
  }
  j["cells"] = std::move(cells);
  json charts = json::array();
  for (std::uint32_t v = 0; v < ball.vertices().size(); ++v) {
    json chart = json::array();
    for (const ChartEntry& entry : ball.chart(v)) chart.push_back(json::array({entry.cell, to_string(entry.position)}));
    charts.push_back(std::move(chart));
  }
  j["charts"] = std::move(charts);
  return j;
}

static DevelopedBall developed_ball_from_json_impl(const json& j) {
  expect_kind(j, "developed_ball");
  DevelopedBall ball(parse_sigma(j.at("sigma").get<std::string>()), j.at("r").get<int>(), j.at("s").get<int>());
  const std::size_t k = ball.k();
  for (const json& v : j.at("vertices")) {
    const auto type = v.at("type").get<std::uint32_t>();
    if (type >= k) throw ValidationError("vertex type out of range");
    ball.add_vertex({type, v.at("interior").get<bool>()});
  }
  const std::size_t n = ball.vertices().size();
  for (const json& e : j.at("edges")) {
    ball.add_edge({e.at("type").get<std::uint32_t>(), e.at("source").get<std::uint32_t>(), e.at("target").get<std::uint32_t>()});
  }
  for (const json& c : j.at("cells")) {
    HigCell cell{c.at("vertices").get<std::vector<std::uint32_t>>(), c.at("edges").get<std::vector<std::uint32_t>>(),
                 c.at("level").get<int>(), c.at("interior").get<bool>()};
    if (cell.vertices.size() != k || cell.edges.size() != k) throw ValidationError("a cell needs k vertices and k edges");
    for (std::uint32_t v : cell.vertices) {
      if (v >= n) throw ValidationError("cell vertex out of range");
    }
    for (std::uint32_t e : cell.edges) {
      if (e >= ball.edges().size()) throw ValidationError("cell edge out of range");
    }
    ball.add_cell(std::move(cell));
  }
  const json& charts = j.at("charts");
  if (charts.size() != n) throw ValidationError("one chart per vertex expected");
  for (std::uint32_t v = 0; v < n; ++v) {
    const BsParams& params = vertex_group(ball.sigma(), ball.vertices()[v].type);
    for (const json& entry : charts[v]) {
      const auto cell = entry.at(0).get<std::uint32_t>();
      if (cell >= ball.cells().size()) throw ValidationError("chart cell out of range");
      ball.add_chart_entry(v, {cell, position_from_word(params, entry.at(1).get<std::string>())});
    }
  }
  ball.finalize();
  return ball;
}

json to_json(const LinkGraph& link) {
  json j = schema_header("link_graph");
  j["vertex"] = link.vertex;
  json nodes = json::array();
  for (std::size_t i = 0; i < link.nodes.size(); ++i) {
    nodes.push_back({{"edge", link.nodes[i]}, {"orientation", link.out[i] ? "out" : "in"}});
  }
  j["nodes"] = std::move(nodes);
  json links = json::array();
  for (std::size_t i = 0; i < link.links.size(); ++i) {
    links.push_back(json::array({link.links[i].first, link.links[i].second, link.link_cells[i]}));
  }
  j["links"] = std::move(links);
  return j;
}

static LinkGraph link_graph_from_json_impl(const json& j) {
  expect_kind(j, "link_graph");
  LinkGraph link;
  link.vertex = j.at("vertex").get<std::uint32_t>();
  for (const json& node : j.at("nodes")) {
    link.nodes.push_back(node.at("edge").get<std::uint32_t>());
    const std::string orientation = node.at("orientation").get<std::string>();
    if (orientation != "out" && orientation != "in") throw ValidationError("orientation is 'out' or 'in'");
    link.out.push_back(orientation == "out");
  }
  for (const json& l : j.at("links")) {
    const auto a = l.at(0).get<std::uint32_t>();
    const auto b = l.at(1).get<std::uint32_t>();
    if (a >= link.nodes.size() || b >= link.nodes.size()) throw ValidationError("link node out of range");
    link.links.emplace_back(a, b);
    link.link_cells.push_back(l.at(2).get<std::uint32_t>());
  }
  return link;
}

json to_json(const CommonPowerWitness& w) {
  json j = schema_header("common_power_witness");
  j["i"] = w.i;
  j["s1"] = w.s1;
  j["s2"] = w.s2;
  j["exponent"] = to_decimal(w.exponent);
  j["witness"] = to_json(w.witness);
  j["image1"] = to_decimal(w.image1);
  j["image2"] = to_decimal(w.image2);
  return j;
}

static CommonPowerWitness common_power_witness_from_json_impl(const Sigma& sigma, const json& j) {
  expect_kind(j, "common_power_witness");
  CommonPowerWitness w{j.at("i").get<std::size_t>(), j.at("s1").get<std::int64_t>(), j.at("s2").get<std::int64_t>(), 0,
                       BsElement(sigma.pairs.at(0)), 0, 0};
  if (w.i >= sigma.k()) throw ValidationError("generator index out of range");
  w.exponent = from_decimal(j.at("exponent").get<std::string>());
  w.witness = element_from_json(vertex_group(sigma, w.i), j.at("witness"));
  w.image1 = from_decimal(j.at("image1").get<std::string>());
  w.image2 = from_decimal(j.at("image2").get<std::string>());
  return w;
}

json to_json(const ThetaBall& theta) {
  json j = schema_header("theta_ball");
  json interior = json::array();
  for (std::uint32_t v = 0; v < theta.size(); ++v) interior.push_back(theta.interior(v));
  j["nodes"] = theta.size();
  j["interior"] = std::move(interior);
  json edges = json::array();
  for (auto [u, v] : theta.edges()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

static ThetaBall theta_from_json_impl(const json& j) {
  expect_kind(j, "theta_ball");
  ThetaBall theta(j.at("nodes").get<std::size_t>());
  const json& interior = j.at("interior");
  if (interior.size() != theta.size()) throw ValidationError("one interior flag per node expected");
  for (std::uint32_t v = 0; v < theta.size(); ++v) theta.set_interior(v, interior[v].get<bool>());
  for (const json& e : j.at("edges")) {
    const auto u = e.at(0).get<std::uint32_t>();
    const auto v = e.at(1).get<std::uint32_t>();
    if (u >= theta.size() || v >= theta.size()) throw ValidationError("theta edge out of range");
    theta.add_edge(u, v);
  }
  theta.finalize();
  return theta;
}

json cycles_to_json(const std::vector<Cycle>& cycles) {
  json j = schema_header("cycles");
  j["count"] = cycles.size();
  j["cycles"] = cycles;
  return j;
}

static std::vector<Cycle> cycles_from_json_impl(const json& j) {
  expect_kind(j, "cycles");
  return j.at("cycles").get<std::vector<Cycle>>();
}

json report_document(const Report& report) {
  json j = schema_header("report");
  j["report"] = report;
  return j;
}

static Report report_from_document_impl(const json& j) {
  expect_kind(j, "report");
  return j.at("report").get<Report>();
}

namespace {

const char* type_colour(std::size_t type) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};
  return palette[type % 8];
}

void skeleton_dot(std::ostringstream& out, const DevelopedBall& ball) {
  for (std::uint32_t v = 0; v < ball.vertices().size(); ++v) {
    const HigVertex& vertex = ball.vertices()[v];
    out << "  v" << v << " [label=\"x" << vertex.type + 1 << ":" << v << "\", color=" << type_colour(vertex.type)
        << (vertex.interior ? ", style=bold" : "") << "];\n";
  }
  for (const HigEdge& e : ball.edges()) {
    out << "  v" << e.source << " -> v" << e.target << " [color=" << type_colour(e.type) << "];\n";
  }
}

}  // namespace

std::string to_dot(const DevelopedBall& ball) {
  std::ostringstream out;
  out << "digraph developed_ball {\n";
  skeleton_dot(out, ball);
  out << "}\n";
  return out.str();
}

std::string to_dot(const DevelopedBall& ball, const ThetaBall& theta) {
  std::ostringstream out;
  out << "digraph theta_overlay {\n";
  skeleton_dot(out, ball);
  for (auto [u, v] : theta.edges()) {
    if (ball.edge_between(u, v)) continue;
    out << "  v" << u << " -> v" << v << " [style=dashed, dir=none, color=gray];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------

BsParams params_from_json(const json& j) {
  return guarded([&] { return params_from_json_impl(j); });
}

BsElement element_from_json(const BsParams& params, const json& j) {
  return guarded([&] { return element_from_json_impl(params, j); });
}

StandardLine line_from_json(const BsParams& params, const json& j) {
  return guarded([&] { return line_from_json_impl(params, j); });
}

TreeVertex tree_vertex_from_json(const json& j) {
  return guarded([&] { return tree_vertex_from_json_impl(j); });
}

CayleyBall cayley_ball_from_json(const json& j) {
  return guarded([&] { return cayley_ball_from_json_impl(j); });
}

LambdaGraph lambda_graph_from_json(const json& j) {
  return guarded([&] { return lambda_graph_from_json_impl(j); });
}

GapReport gap_report_from_json(const json& j) {
  return guarded([&] { return gap_report_from_json_impl(j); });
}

Sigma sigma_from_json(const json& j) {
  return guarded([&] { return sigma_from_json_impl(j); });
}

FSigma f_sigma_from_json(const json& j) {
  return guarded([&] { return f_sigma_from_json_impl(j); });
}

DevelopedBall developed_ball_from_json(const json& j) {
  return guarded([&] { return developed_ball_from_json_impl(j); });
}

LinkGraph link_graph_from_json(const json& j) {
  return guarded([&] { return link_graph_from_json_impl(j); });
}

CommonPowerWitness common_power_witness_from_json(const Sigma& sigma, const json& j) {
  return guarded([&] { return common_power_witness_from_json_impl(sigma, j); });
}

ThetaBall theta_from_json(const json& j) {
  return guarded([&] { return theta_from_json_impl(j); });
}

std::vector<Cycle> cycles_from_json(const json& j) {
  return guarded([&] { return cycles_from_json_impl(j); });
}

Report report_from_document(const json& j) {
  return guarded([&] { return report_from_document_impl(j); });
}

}  // namespace hgrig
