#include <algorithm>
#include <deque>
#include <map>

#include <boost/multiprecision/integer.hpp>
#include <openssl/sha.h>

#include "hgrig/cayley_lines.hpp"
#include "hgrig/error.hpp"
#include "hgrig/higman.hpp"
#include "hgrig/serialize.hpp"
#include "detail/parallel.hpp"

namespace hgrig {

// ---------------------------------------------------------------------------
// Links

LinkGraph link_of(const DevelopedBall& ball, std::uint32_t vertex) {
  if (vertex >= ball.vertices().size()) throw ValidationError("no vertex " + std::to_string(vertex));
  if (!ball.vertices()[vertex].interior) {
    throw TruncationError("truncation-insufficient: vertex " + std::to_string(vertex) + " is on the boundary");
  }
  const std::size_t k = ball.k();
  const std::uint32_t type = ball.vertices()[vertex].type;
  LinkGraph link;
  link.vertex = vertex;
  std::unordered_map<std::uint32_t, std::uint32_t> node_of;
  for (std::uint32_t e : ball.incident_edges(vertex)) {
    node_of.emplace(e, static_cast<std::uint32_t>(link.nodes.size()));
    link.nodes.push_back(e);
    link.out.push_back(ball.edges()[e].source == vertex);
  }
  auto node = [&](std::uint32_t e) {
    auto it = node_of.find(e);
    if (it == node_of.end()) throw InternalError("a cell at a vertex uses an edge not incident to it");
    return it->second;
  };
  for (const ChartEntry& entry : ball.chart(vertex)) {
    const HigCell& cell = ball.cells()[entry.cell];
    link.links.emplace_back(node(cell.edges[type]), node(cell.edges[(type + k - 1) % k]));
    link.link_cells.push_back(entry.cell);
  }
  return link;
}

bool is_bipartite(const LinkGraph& link) {
  return std::all_of(link.links.begin(), link.links.end(),
                     [&](const auto& l) { return link.out[l.first] && !link.out[l.second]; });
}

std::optional<std::size_t> girth(const LinkGraph& link) {
  const std::size_t n = link.nodes.size();
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(n);  // (neighbour, link index)
  for (std::uint32_t i = 0; i < link.links.size(); ++i) {
    adj[link.links[i].first].emplace_back(link.links[i].second, i);
    adj[link.links[i].second].emplace_back(link.links[i].first, i);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n);
  std::vector<std::uint32_t> via(n);
  std::vector<std::uint32_t> seen;
  const std::size_t unseen = std::numeric_limits<std::size_t>::max();
  std::fill(dist.begin(), dist.end(), unseen);
  for (std::uint32_t source = 0; source < n; ++source) {
    for (std::uint32_t v : seen) dist[v] = unseen;
    seen.assign(1, source);
    dist[source] = 0;
    std::deque<std::uint32_t> queue{source};
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (auto [w, l] : adj[u]) {
        if (u != source && l == via[u]) continue;
        if (dist[w] == unseen) {
          dist[w] = dist[u] + 1;
          via[w] = l;
          seen.push_back(w);
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

namespace {

struct LambdaOracle {
  CayleyBall steps;
  LambdaGraph graph;
};

// Checks one interior vertex; results are written to `out`.
void check_vertex(const DevelopedBall& ball, std::uint32_t v, const std::vector<LambdaOracle>& oracles, Report& out,
                  std::optional<std::size_t>& girth_out) {
  const std::size_t k = ball.k();
  const std::uint32_t type = ball.vertices()[v].type;
  const std::uint32_t prev = static_cast<std::uint32_t>((type + k - 1) % k);
  LinkGraph link = link_of(ball, v);
  if (!is_bipartite(link)) out.violate({"link-not-bipartite", {{"vertex", v}}});
  girth_out = girth(link);
  if (girth_out && *girth_out < 4) out.violate({"link-girth", {{"vertex", v}, {"girth", *girth_out}}});

  // lines of the chart <-> incident edges, both ways
  std::unordered_map<BsElement, std::uint32_t, BsElementHash> a_edge;
  std::unordered_map<BsElement, std::uint32_t, BsElementHash> t_edge;
  std::unordered_map<std::uint32_t, BsElement> edge_line;
  auto bind = [&](auto& table, BsElement line, std::uint32_t edge, const char* kind) {
    auto [it, inserted] = table.emplace(line, edge);
    if (!inserted && it->second != edge) out.violate({std::string(kind) + "-line-split", {{"vertex", v}, {"edge", edge}}});
    auto [jt, fresh] = edge_line.emplace(edge, std::move(line));
    if (!fresh && !(jt->second == it->first)) out.violate({std::string(kind) + "-lines-merged", {{"vertex", v}, {"edge", edge}}});
  };
  for (const ChartEntry& entry : ball.chart(v)) {
    const HigCell& cell = ball.cells()[entry.cell];
    const HigEdge& out_edge = ball.edges()[cell.edges[type]];
    const HigEdge& in_edge = ball.edges()[cell.edges[prev]];
    if (out_edge.source != v || out_edge.type != type) out.violate({"out-edge-orientation", {{"vertex", v}, {"cell", entry.cell}}});
    if (in_edge.target != v || in_edge.type != prev) out.violate({"in-edge-orientation", {{"vertex", v}, {"cell", entry.cell}}});
    bind(a_edge, entry.position.without_tail(), cell.edges[type], "a");
    bind(t_edge, t_line_rep(entry.position).first, cell.edges[prev], "t");
  }
  if (a_edge.size() + t_edge.size() != link.nodes.size()) {
    out.violate({"link-node-count", {{"vertex", v}, {"lines", a_edge.size() + t_edge.size()}, {"edges", link.nodes.size()}}});
  }

  // the s-truncated line graph around every expanded cell
  const LambdaOracle& oracle = oracles[type];
  for (const ChartEntry& entry : ball.chart(v)) {
    if (!ball.cells()[entry.cell].interior) continue;
    std::vector<std::optional<std::uint32_t>> image(oracle.graph.nodes().size());
    std::unordered_map<std::uint32_t, std::uint32_t> preimage;
    for (std::uint32_t x = 0; x < oracle.steps.size(); ++x) {
      auto cell = ball.cell_at(v, multiply(entry.position, oracle.steps.vertices()[x]));
      if (!cell) {
        out.violate({"star-incomplete", {{"vertex", v}, {"cell", entry.cell}, {"step", to_json(oracle.steps.vertices()[x])}}});
        continue;
      }
      const HigCell& c = ball.cells()[*cell];
      const LambdaLink& l = oracle.graph.links()[x];
      for (auto [node, edge] : {std::pair{l.a_node, c.edges[type]}, std::pair{l.t_node, c.edges[prev]}}) {
        if (!image[node]) {
          image[node] = edge;
          if (!preimage.emplace(edge, node).second) out.violate({"lambda-nodes-merged", {{"vertex", v}, {"edge", edge}}});
        } else if (*image[node] != edge) {
          out.violate({"lambda-node-split", {{"vertex", v}, {"node", node}}});
        }
      }
    }
  }
}

}  // namespace

Report check_links(const DevelopedBall& ball, unsigned threads) {
  Report report;
  report.check = "links";
  std::vector<LambdaOracle> oracles;
  for (std::size_t i = 0; i < ball.k(); ++i) {
    CayleyBall steps = hgrig::ball(vertex_group(ball.sigma(), i), ball.s());
    LambdaGraph graph = lambda_graph(steps);
    oracles.push_back({std::move(steps), std::move(graph)});
  }
  std::vector<std::uint32_t> interior;
  for (std::uint32_t v = 0; v < ball.vertices().size(); ++v) {
    if (ball.vertices()[v].interior) interior.push_back(v);
  }
  std::vector<Report> parts(interior.size());
  std::vector<std::optional<std::size_t>> girths(interior.size());
  detail::parallel_for(
      interior.size(), threads, [&](std::size_t i) { check_vertex(ball, interior[i], oracles, parts[i], girths[i]); }, 8);
  std::map<std::string, std::size_t> girth_histogram;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    merge_into(report, parts[i]);
    girth_histogram[girths[i] ? std::to_string(*girths[i]) : "acyclic"]++;
  }
  report.stats["interior_vertices"] = interior.size();
  report.stats["girth"] = girth_histogram;
  report.stats["s"] = ball.s();
  if (interior.empty()) report.inconclusive("no interior vertices");
  return report;
}

Report check_quotient(const DevelopedBall& ball) {
  Report report;
  report.check = "quotient";
  const std::size_t k = ball.k();
  for (std::uint32_t e = 0; e < ball.edges().size(); ++e) {
    const HigEdge& edge = ball.edges()[e];
    if (ball.vertices()[edge.source].type != edge.type || ball.vertices()[edge.target].type != (edge.type + 1) % k) {
      report.violate({"edge-orientation", {{"edge", e}}});
    }
  }
  std::vector<std::vector<std::uint32_t>> cells_on(ball.edges().size());
  for (std::uint32_t c = 0; c < ball.cells().size(); ++c) {
    const HigCell& cell = ball.cells()[c];
    bool ok = cell.vertices.size() == k && cell.edges.size() == k;
    for (std::uint32_t i = 0; ok && i < k; ++i) {
      const HigEdge& edge = ball.edges()[cell.edges[i]];
      ok = ball.vertices()[cell.vertices[i]].type == i && edge.type == i && edge.source == cell.vertices[i] &&
           edge.target == cell.vertices[(i + 1) % k];
    }
    if (!ok) report.violate({"cell-not-polygon", {{"cell", c}}});
    for (std::uint32_t e : cell.edges) cells_on[e].push_back(c);
  }
  // pairs of distinct cells sharing two edges, or two vertices but no edge
  std::size_t two_edges = 0;
  std::size_t two_vertices = 0;
  std::unordered_map<std::uint32_t, std::uint32_t> count;
  for (std::uint32_t c = 0; c < ball.cells().size(); ++c) {
    count.clear();
    for (std::uint32_t e : ball.cells()[c].edges) {
      for (std::uint32_t d : cells_on[e]) {
        if (d > c) ++count[d];
      }
    }
    for (auto [d, n] : count) {
      if (n > 1) {
        ++two_edges;
        report.violate({"cells-share-two-edges", {{"cells", {c, d}}}});
      }
    }
    count.clear();
    for (std::uint32_t v : ball.cells()[c].vertices) {
      for (const ChartEntry& entry : ball.chart(v)) {
        if (entry.cell > c) ++count[entry.cell];
      }
    }
    for (auto [d, n] : count) {
      if (n < 2) continue;
      bool share_edge = false;
      for (std::uint32_t e : ball.cells()[c].edges) {
        share_edge = share_edge || std::binary_search(cells_on[e].begin(), cells_on[e].end(), d);
      }
      if (!share_edge) ++two_vertices;
    }
  }
  report.stats["cells"] = ball.cells().size();
  report.stats["edges"] = ball.edges().size();
  report.stats["vertices"] = ball.vertices().size();
  report.stats["cell_pairs_sharing_two_edges"] = two_edges;
  report.stats["cell_pairs_sharing_two_vertices_no_edge"] = two_vertices;
  if (two_vertices) report.notes.push_back("distinct cells sharing two vertices without an edge are present");
  return report;
}

std::string ball_hash(const DevelopedBall& ball) {
  const std::string text = to_json(ball).dump();
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), digest);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char byte : digest) {
    out += hex[byte >> 4];
    out += hex[byte & 15];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stabilizers

std::string to_string(StabilizerClass c) {
  switch (c) {
    case StabilizerClass::trivial: return "trivial";
    case StabilizerClass::nontrivial_adjacent: return "nontrivial_adjacent";
    case StabilizerClass::nontrivial_common_source: return "nontrivial_common_source";
  }
  return "?";
}

std::vector<bool> deep_vertices(const DevelopedBall& ball, int margin) {
  std::vector<bool> deep(ball.vertices().size(), false);
  for (const HigCell& cell : ball.cells()) {
    if (cell.level <= ball.r() - margin) {
      for (std::uint32_t v : cell.vertices) deep[v] = true;
    }
  }
  return deep;
}

StabilizerClass stabilizer_intersection_class(const DevelopedBall& ball, std::uint32_t v1, std::uint32_t v2,
                                              int margin) {
  const std::size_t n = ball.vertices().size();
  if (v1 >= n || v2 >= n) throw ValidationError("vertex id out of range");
  if (v1 == v2) throw ValidationError("stabilizer_intersection_class needs two distinct vertices");
  if (ball.edge_between(v1, v2)) return StabilizerClass::nontrivial_adjacent;
  for (std::uint32_t e : ball.incident_edges(v1)) {
    const HigEdge& edge = ball.edges()[e];
    if (edge.target != v1) continue;
    auto other = ball.edge_between(edge.source, v2);
    if (other && ball.edges()[*other].source == edge.source) return StabilizerClass::nontrivial_common_source;
  }
  const std::vector<bool> deep = deep_vertices(ball, margin);
  if (!deep[v1] || !deep[v2]) {
    throw TruncationError("truncation-insufficient: a common source of vertices " + std::to_string(v1) + " and " +
                          std::to_string(v2) + " could lie outside the ball (margin " + std::to_string(margin) + ")");
  }
  return StabilizerClass::trivial;
}

// ---------------------------------------------------------------------------
// Common powers

namespace {

// Least D > 0 with t^-s a^N t^s in <a> exactly for N in D Z.
BigInt conjugation_modulus(const BsParams& params, std::int64_t s) {
  // t^-1 a^x t = a^{x m / n} needs n | x; t a^x t^-1 = a^{x n / m} needs m | x
  const BigInt num = s >= 0 ? params.abs_n() : params.abs_m();
  const BigInt den = s >= 0 ? params.abs_m() : params.abs_n();
  BigInt modulus = 1;
  BigInt num_power = 1;
  BigInt den_power = 1;
  for (std::int64_t j = 1; j <= (s >= 0 ? s : -s); ++j) {
    num_power *= num;
    if (j > 1) den_power *= den;
    // N den^{j-1} must be divisible by num^j
    modulus = boost::multiprecision::lcm(modulus, num_power / boost::multiprecision::gcd(num_power, den_power));
  }
  return modulus;
}

BigInt conjugate_exponent(const BsParams& params, const BigInt& exponent, std::int64_t s) {
  BsElement x = power_of(params, Label::t, -s);
  x.append_a(exponent);
  x.append_t_power(s);
  auto z = subgroup_membership(x, Label::a);
  if (!z) throw InternalError("common power witness failed normalization");
  return *z;
}

}  // namespace

CommonPowerWitness common_power_witness(const Sigma& sigma, std::size_t i, std::int64_t s1, std::int64_t s2,
                                        std::int64_t bound) {
  if (i >= sigma.k()) throw ValidationError("generator index out of range");
  if (s1 == s2) throw ValidationError("common_power_witness needs s1 != s2");
  if (std::abs(s1) > bound || std::abs(s2) > bound) throw ValidationError("|s1|, |s2| must be <= bound");
  const BsParams& params = vertex_group(sigma, i);
  CommonPowerWitness w{i, s1, s2, 0, BsElement(params), 0, 0};
  w.exponent = boost::multiprecision::lcm(conjugation_modulus(params, s1), conjugation_modulus(params, s2));
  w.witness = power_of(params, Label::a, w.exponent);
  w.image1 = conjugate_exponent(params, w.exponent, s1);
  w.image2 = conjugate_exponent(params, w.exponent, s2);
  return w;
}

// ---------------------------------------------------------------------------
// The F_sigma action

FSigmaAction act_f_sigma(const DevelopedBall& ball, std::size_t tau, bool force) {
  const std::size_t k = ball.k();
  tau %= k;
  const FSigma f = f_sigma(ball.sigma());
  if (!f.contains(tau) && !force) {
    throw ValidationError("translation " + std::to_string(tau) + " is not in F_sigma of " + to_string(ball.sigma()));
  }
  FSigmaAction action;
  action.tau = tau;
  action.cell_map.assign(ball.cells().size(), std::nullopt);
  action.vertex_map.assign(ball.vertices().size(), std::nullopt);
  action.edge_map.assign(ball.edges().size(), std::nullopt);
  Report& report = action.report;
  report.check = "f_sigma_action";
  report.stats["tau"] = tau;
  report.stats["member"] = f.contains(tau);

  // chart positions of a type-j vertex, read in the type-(j+tau) group
  auto shift = [&](const BsElement& p, std::uint32_t type) {
    const BsParams& target = vertex_group(ball.sigma(), (type + tau) % k);
    return p.params() == target ? p : normalize(target, render(p));
  };

  std::vector<std::optional<BsElement>> offset(ball.vertices().size());
  std::deque<std::uint32_t> queue{DevelopedBall::base_cell};
  action.cell_map[DevelopedBall::base_cell] = DevelopedBall::base_cell;
  std::size_t unmapped_boundary = 0;
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    const HigCell& cell = ball.cells()[c];
    const HigCell& image = ball.cells()[*action.cell_map[c]];
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::uint32_t x = cell.vertices[j];
      const std::uint32_t y = image.vertices[(j + tau) % k];
      const BsElement moved = shift(ball.position(x, c), j);
      if (action.vertex_map[x]) {
        if (*action.vertex_map[x] != y) {
          report.violate({"vertex-map-inconsistent", {{"vertex", x}, {"images", {*action.vertex_map[x], y}}}});
        } else if (multiply(*offset[x], moved) != ball.position(y, *action.cell_map[c])) {
          report.violate({"chart-offset-not-constant", {{"vertex", x}, {"cell", c}}});
        }
        continue;
      }
      // first visit: the whole chart of x moves by one left offset
      action.vertex_map[x] = y;
      offset[x] = multiply(ball.position(y, *action.cell_map[c]), invert(moved));
      for (const ChartEntry& entry : ball.chart(x)) {
        auto target = ball.cell_at(y, multiply(*offset[x], shift(entry.position, j)));
        if (!target) {
          if (ball.cells()[entry.cell].interior) {
            report.violate({"image-missing", {{"cell", entry.cell}, {"vertex", x}}});
          } else {
            ++unmapped_boundary;
          }
          continue;
        }
        if (!action.cell_map[entry.cell]) {
          action.cell_map[entry.cell] = *target;
          queue.push_back(entry.cell);
        } else if (*action.cell_map[entry.cell] != *target) {
          report.violate({"cell-map-inconsistent", {{"cell", entry.cell}, {"images", {*action.cell_map[entry.cell], *target}}}});
        }
      }
    }
  }

  // edges follow cells; everything must be injective and type-shifting
  for (std::uint32_t c = 0; c < ball.cells().size(); ++c) {
    if (!action.cell_map[c]) continue;
    const HigCell& image = ball.cells()[*action.cell_map[c]];
    for (std::uint32_t j = 0; j < k; ++j) {
      const std::uint32_t e = ball.cells()[c].edges[j];
      const std::uint32_t g = image.edges[(j + tau) % k];
      if (!action.edge_map[e]) {
        action.edge_map[e] = g;
      } else if (*action.edge_map[e] != g) {
        report.violate({"edge-map-inconsistent", {{"edge", e}}});
      }
      const HigEdge& edge = ball.edges()[e];
      const HigEdge& moved = ball.edges()[g];
      if (moved.source != action.vertex_map[edge.source] || moved.target != action.vertex_map[edge.target]) {
        report.violate({"edge-orientation-not-preserved", {{"edge", e}}});
      }
    }
  }
  auto injective = [&](const auto& map, const char* kind) {
    std::vector<bool> hit(map.size(), false);
    std::size_t mapped = 0;
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (!map[i]) continue;
      ++mapped;
      if (hit[*map[i]]) report.violate({std::string(kind) + "-map-not-injective", {{"id", i}}});
      hit[*map[i]] = true;
    }
    return mapped;
  };
  report.stats["cells_mapped"] = injective(action.cell_map, "cell");
  report.stats["vertices_mapped"] = injective(action.vertex_map, "vertex");
  report.stats["edges_mapped"] = injective(action.edge_map, "edge");
  report.stats["boundary_images_outside_ball"] = unmapped_boundary;
  for (std::uint32_t c = 0; c < ball.cells().size(); ++c) {
    if (ball.cells()[c].interior && !action.cell_map[c]) report.violate({"interior-cell-unmapped", {{"cell", c}}});
  }
  for (std::uint32_t v = 0; v < ball.vertices().size(); ++v) {
    const auto& image = action.vertex_map[v];
    if (image && ball.vertices()[*image].type != (ball.vertices()[v].type + tau) % k) {
      report.violate({"vertex-type-not-shifted", {{"vertex", v}}});
    }
  }
  return action;
}

}  // namespace hgrig
