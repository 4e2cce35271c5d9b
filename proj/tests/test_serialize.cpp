#include "doctest.h"

#include "hgrig/error.hpp"
#include "hgrig/serialize.hpp"

using namespace hgrig;

namespace {

json reparse(const json& j) { return json::parse(j.dump()); }

}  // namespace

TEST_CASE("JSON round trips for group data") {
  const BsParams p = make_params(2, -3);
  CHECK(params_from_json(reparse(to_json(p))) == p);
  const BsElement x = normalize(p, "t a^5 T a^-7 t t a^123456789012");
  CHECK(element_from_json(p, reparse(to_json(x))) == x);
  const StandardLine line = line_of(x, Label::t);
  CHECK(line_from_json(p, reparse(to_json(line))) == line);
  const TreeVertex v = tree_vertex_of(x);
  CHECK(tree_vertex_from_json(reparse(to_json(v))) == v);

  LambdaGraph g = lambda_graph(ball(make_params(2, 4), 8));
  GapReport r = gaps(g, line_of(BsElement(g.params()), Label::a), line_of(normalize(g.params(), "T"), Label::a));
  CHECK(gap_report_from_json(reparse(to_json(r))) == r);

  // big exponents travel as decimal strings
  const BsElement huge = normalize(p, "a^1000000000000000000000000");
  CHECK(to_json(huge)["tail"].is_string());
  CHECK(element_from_json(p, reparse(to_json(huge))) == huge);
}

TEST_CASE("JSON round trips for Higman data") {
  const Sigma sigma = parse_sigma("2,3;1,2;2,-3;1,3;1,2");
  CHECK(sigma_from_json(reparse(to_json(sigma))) == sigma);
  const FSigma f = f_sigma(parse_sigma("1,2;1,3;1,2;1,3"));
  CHECK(f_sigma_from_json(reparse(to_json(f))) == f);

  DevelopedBall b = build_ball(sigma, 2, 1);
  DevelopedBall back = developed_ball_from_json(reparse(to_json(b)));
  CHECK(back == b);
  CHECK(ball_hash(back) == ball_hash(b));
  for (std::uint32_t v = 0; v < b.vertices().size(); ++v) {
    for (const ChartEntry& entry : b.chart(v)) CHECK(back.cell_at(v, entry.position) == entry.cell);
  }

  const LinkGraph link = link_of(b, b.cells()[0].vertices[0]);
  const LinkGraph link_back = link_graph_from_json(reparse(to_json(link)));
  CHECK(link_back.vertex == link.vertex);
  CHECK(link_back.nodes == link.nodes);
  CHECK(link_back.out == link.out);
  CHECK(link_back.links == link.links);
  CHECK(link_back.link_cells == link.link_cells);

  const CommonPowerWitness w = common_power_witness(sigma, 3, -2, 3, 3);
  const CommonPowerWitness w_back = common_power_witness_from_json(sigma, reparse(to_json(w)));
  CHECK(w_back.i == w.i);
  CHECK(w_back.s1 == w.s1);
  CHECK(w_back.s2 == w.s2);
  CHECK(w_back.exponent == w.exponent);
  CHECK(w_back.witness == w.witness);
  CHECK(w_back.image1 == w.image1);
  CHECK(w_back.image2 == w.image2);

  const ThetaBall t = theta(b);
  CHECK(theta_from_json(reparse(to_json(t))) == t);
  const std::vector<Cycle> cycles = induced_cycles(t, 5, deep_region(b, 1));
  CHECK(cycles_from_json(reparse(cycles_to_json(cycles))) == cycles);

  Report report = check_quotient(b);
  report.violate({"example", {{"cell", 3}}});
  report.inconclusive("a note");
  CHECK(report_from_document(reparse(report_document(report))) == report);
}

TEST_CASE("malformed documents are rejected") {
  const Sigma sigma = parse_sigma("1,2;1,2;1,2;1,2;1,2");
  DevelopedBall b = build_ball(sigma, 1, 1);
  json doc = to_json(b);
  doc["schema"] = 7;
  CHECK_THROWS_AS(developed_ball_from_json(doc), ValidationError);
  CHECK_THROWS_AS(developed_ball_from_json(to_json(sigma)), ValidationError);
  CHECK_THROWS_AS(sigma_from_json(json::parse(R"({"schema":1,"kind":"sigma","pairs":[[1,1],[1,2],[1,2],[1,2]]})")),
                  ValidationError);
}

TEST_CASE("DOT exports") {
  DevelopedBall b = build_ball(parse_sigma("1,2;1,2;1,2;1,2;1,2"), 0, 1);
  const std::string dot = to_dot(b);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  const std::string with_theta = to_dot(b, theta(b));
  CHECK(with_theta.rfind("digraph", 0) == 0);
  CHECK(dot.back() == '\n');
}
