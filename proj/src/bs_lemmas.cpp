#include "hgrig/bs_lemmas.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include "hgrig/error.hpp"
#include "hgrig/serialize.hpp"

namespace hgrig {

namespace {

constexpr std::int64_t kCommonLineScanCap = std::int64_t{1} << 20;

using LineSet = std::unordered_set<StandardLine, StandardLineHash>;

/// Reads t-segments through the ball.
class Probe {
 public:
  explicit Probe(const LambdaGraph& graph) : ball_(graph.ball()) {}

  /// Whether the t-line through x meets `target` at x t^offset; nullopt when
  /// the segment leaves the ball before the answer is known. The t-line
  /// projects to a tree geodesic, so it misses the target as soon as one step
  /// fails to bring it closer.
  std::optional<bool> meets(const BsElement& x, std::int64_t offset, const StandardLine& target) const {
    const TreeVertex goal = bass_serre_address(target);
    const std::int64_t steps = offset < 0 ? -offset : offset;
    const int sign = offset < 0 ? -1 : 1;
    BsElement y = x;
    for (std::int64_t k = 0;; ++k) {
      if (!ball_.contains(y)) return std::nullopt;
      if (tree_distance(tree_vertex_of(y), goal) != static_cast<std::size_t>(steps - k)) return false;
      if (k == steps) return true;
      y.append_t(sign);
    }
  }

 private:
  const CayleyBall& ball_;
};

BsElement times_a(BsElement x, const BigInt& e) {
  x.append_a(e);
  return x;
}

BsElement times_t(BsElement x, std::int64_t e) {
  x.append_t_power(e);
  return x;
}

void require_a_line(const StandardLine& line, const char* what) {
  if (line.label != Label::a) throw ValidationError(std::string(what) + " must be an a-line");
}

std::int64_t as_offset(std::size_t d) { return static_cast<std::int64_t>(d); }

/// Second vertex on the geodesic from `from` to `to` (from != to).
TreeVertex step_towards(const TreeVertex& from, const TreeVertex& to) {
  const auto& x = from.address;
  const auto& y = to.address;
  const bool prefix = x.size() < y.size() && std::equal(x.begin(), x.end(), y.begin());
  if (prefix) return TreeVertex{{y.begin(), y.begin() + static_cast<std::ptrdiff_t>(x.size() + 1)}};
  return TreeVertex{{x.begin(), x.end() - 1}};
}

struct Pair {
  StandardLine low;
  StandardLine high;
  std::size_t d = 0;
  bool u1_is_low = false;
};

Pair orient(const StandardLine& u1, const StandardLine& u2) {
  require_a_line(u1, "u1");
  require_a_line(u2, "u2");
  const TreeVertex v1 = bass_serre_address(u1);
  const TreeVertex v2 = bass_serre_address(u2);
  switch (tree_order(v1, v2)) {
    case TreeOrder::equal: throw ValidationError("u1 and u2 are the same line");
    case TreeOrder::incomparable: throw ValidationError("u1 and u2 are incomparable in the Bass-Serre tree");
    case TreeOrder::less: return {u1, u2, tree_distance(v1, v2), true};
    case TreeOrder::greater: return {u2, u1, tree_distance(v1, v2), false};
  }
  throw InternalError("unreachable tree order");
}

/// First k >= 1 with z a^{+-k} meeting `target` at offset; nullopt if both
/// directions leave the ball first.
std::optional<BigInt> first_member(const Probe& probe, const BsElement& z, std::int64_t offset,
                                   const StandardLine& target, std::size_t limit) {
  std::optional<BigInt> best;
  for (int sign : {1, -1}) {
    for (std::size_t k = 1; k <= limit; ++k) {
      if (best && BigInt(k) >= *best) break;
      auto r = probe.meets(times_a(z, BigInt(sign) * BigInt(k)), offset, target);
      if (!r) break;
      if (*r) {
        best = BigInt(k);
        break;
      }
    }
  }
  return best;
}

/// Whether two progressions through z (members at offset_x on x, at offset_y
/// on y) have the same gap: the first k >= 1 where either has a member.
std::optional<bool> same_gap(const Probe& probe, const BsElement& z, std::int64_t offset_x, const StandardLine& x,
                             std::int64_t offset_y, const StandardLine& y, std::size_t limit) {
  for (int sign : {1, -1}) {
    for (std::size_t k = 1; k <= limit; ++k) {
      const BsElement w = times_a(z, BigInt(sign) * BigInt(k));
      auto rx = probe.meets(w, offset_x, x);
      auto ry = probe.meets(w, offset_y, y);
      if ((rx && *rx && ry) || (ry && *ry && rx)) return *rx == *ry;
      if (!rx || !ry) break;
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_common_t_line(const StandardLine& low, const StandardLine& high, std::size_t d) {
  require_a_line(low, "low");
  require_a_line(high, "high");
  const BsParams& bp = low.rep.params();
  // line(rep a^j t^d) depends only on j mod |n|^d
  BigInt period = pow(bp.abs_n(), static_cast<unsigned>(d));
  if (period > kCommonLineScanCap) throw ResourceCapError("common t-line search exceeds the scan cap");
  const std::int64_t count = to_int64(period);
  for (std::int64_t j = 0; j < count; ++j) {
    BsElement x = times_t(times_a(low.rep, BigInt(j)), as_offset(d));
    if (x.without_tail() == high.rep) return true;
  }
  return false;
}

GapReport gaps(const LambdaGraph& graph, const StandardLine& u1, const StandardLine& u2) {
  const Pair pair = orient(u1, u2);
  const bool lower = !pair.u1_is_low;  // u2 < u1
  if (!has_common_t_line(pair.low, pair.high, pair.d)) {
    throw ValidationError("no-common-t-line: no t-line meets both a-lines");
  }
  const BsParams& bp = graph.params();
  GapReport report;
  report.d = pair.d;
  report.direction = lower ? "lower" : "upper";
  report.formula_gap = BigInt(bp.h) * pow(lower ? bp.q : bp.p, static_cast<unsigned>(pair.d));

  auto node = graph.find_node(u2);
  if (!node) throw TruncationError("truncation-insufficient: u2 is not visible in the ball");
  const Probe probe(graph);
  const std::int64_t offset = lower ? as_offset(pair.d) : -as_offset(pair.d);
  std::optional<BigInt> previous;  // last decided position of the current run
  std::optional<BigInt> last_hit;  // last intersection in the current run
  bool measured = false;
  for (std::uint32_t v : graph.points(*node)) {
    const BsElement& y = graph.ball().vertices()[v];
    auto hit = probe.meets(y, offset, u1);
    if (!hit) {
      previous.reset();
      last_hit.reset();
      continue;
    }
    if (!previous || y.tail() != *previous + 1) last_hit.reset();
    previous = y.tail();
    if (!*hit) continue;
    if (last_hit) {
      BigInt gap = y.tail() - *last_hit;
      if (!measured) {
        report.measured_gap = gap;
        measured = true;
      } else if (gap != report.measured_gap) {
        report.equally_spaced = false;
      }
      ++report.samples;
    }
    last_hit = y.tail();
  }
  if (!measured) {
    throw TruncationError("truncation-insufficient: no two consecutive intersections are visible");
  }
  return report;
}

Report tree_degree_check(const LambdaGraph& graph) {
  Report report;
  report.check = "tree_degree";
  const BsParams& bp = graph.params();
  const CayleyBall& ball = graph.ball();
  const std::size_t out_degree = static_cast<std::size_t>(bp.abs_n());
  const std::size_t in_degree = static_cast<std::size_t>(bp.abs_m());
  const std::size_t window = std::max(out_degree, in_degree);
  std::size_t a_nodes = 0;
  std::size_t fully_visible = 0;
  for (std::uint32_t node = 0; node < graph.nodes().size(); ++node) {
    const StandardLine& u = graph.nodes()[node];
    if (u.label != Label::a) continue;
    ++a_nodes;
    const TreeVertex uv = bass_serre_address(u);
    LineSet out;
    LineSet in;
    std::size_t run = 0;
    std::size_t best_run = 0;
    std::optional<BigInt> previous;
    for (std::uint32_t v : graph.points(node)) {
      const BsElement& x = ball.vertices()[v];
      for (int sign : {1, -1}) {
        BsElement y = times_t(x, sign);
        if (ball.contains(y)) (sign > 0 ? out : in).insert(line_of(y, Label::a));
      }
      if (ball.interior(v)) {
        run = (previous && x.tail() == *previous + 1) ? run + 1 : 1;
        previous = x.tail();
      } else {
        run = 0;
        previous.reset();
      }
      best_run = std::max(best_run, run);
    }
    auto vertex_json = [&] { return json{{"line", to_json(u)}, {"out", out.size()}, {"in", in.size()}}; };
    for (const LineSet* side : {&out, &in}) {
      const TreeOrder expected = side == &out ? TreeOrder::less : TreeOrder::greater;
      for (const StandardLine& w : *side) {
        const TreeVertex wv = bass_serre_address(w);
        if (tree_order(uv, wv) != expected || tree_distance(uv, wv) != 1) {
          report.violate({"orientation", {{"line", to_json(u)}, {"neighbor", to_json(w)}}});
        }
      }
    }
    if (out.size() > out_degree || in.size() > in_degree) report.violate({"degree-excess", vertex_json()});
    if (best_run >= window) {
      ++fully_visible;
      if (out.size() != out_degree || in.size() != in_degree) report.violate({"degree", vertex_json()});
    }
  }
  report.stats["a_nodes"] = a_nodes;
  report.stats["fully_visible"] = fully_visible;
  report.stats["expected_out"] = out_degree;
  report.stats["expected_in"] = in_degree;
  if (fully_visible == 0) report.inconclusive("truncation-insufficient: no tree vertex is fully visible");
  return report;
}

Report comparability_check(const LambdaGraph& graph) {
  Report report;
  report.check = "comparability";
  std::size_t pairs = 0;
  for (std::uint32_t node = 0; node < graph.nodes().size(); ++node) {
    if (graph.nodes()[node].label != Label::t) continue;
    const auto& pts = graph.points(node);  // sorted by t-offset
    std::vector<TreeVertex> addresses;
    addresses.reserve(pts.size());
    for (std::uint32_t v : pts) addresses.push_back(bass_serre_address(graph.nodes()[graph.node_of(v, Label::a)]));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        ++pairs;
        const std::int64_t steps = graph.t_offset(pts[j]) - graph.t_offset(pts[i]);
        if (tree_order(addresses[i], addresses[j]) != TreeOrder::less ||
            tree_distance(addresses[i], addresses[j]) != static_cast<std::size_t>(steps)) {
          report.violate({"order-along-t-line",
                          {{"lower", to_json(graph.nodes()[graph.node_of(pts[i], Label::a)])},
                           {"upper", to_json(graph.nodes()[graph.node_of(pts[j], Label::a)])},
                           {"order", to_string(tree_order(addresses[i], addresses[j]))}}});
        }
      }
    }
  }
  report.stats["pairs"] = pairs;
  return report;
}

Report containment_check(const LambdaGraph& graph, const StandardLine& u1, const StandardLine& u2,
                         const StandardLine& u3) {
  require_a_line(u1, "u1");
  require_a_line(u2, "u2");
  require_a_line(u3, "u3");
  const TreeVertex v1 = bass_serre_address(u1);
  const TreeVertex v2 = bass_serre_address(u2);
  const TreeVertex v3 = bass_serre_address(u3);
  if (tree_order(v1, v2) != TreeOrder::less || tree_order(v2, v3) != TreeOrder::less) {
    throw ValidationError("containment_check needs u1 < u2 < u3");
  }
  const std::size_t d12 = tree_distance(v1, v2);
  const std::size_t d23 = tree_distance(v2, v3);
  const std::size_t d13 = tree_distance(v1, v3);
  if (d13 != d12 + d23) throw InternalError("ordered triple is not on one geodesic");
  if (!has_common_t_line(u1, u3, d13)) throw ValidationError("no-common-t-line: Lambda_13 is empty");

  Report report;
  report.check = "containment";
  const BsParams& bp = graph.params();
  report.stats["d12"] = d12;
  report.stats["d23"] = d23;
  report.stats["p"] = bp.p;
  const Probe probe(graph);

  auto node2 = graph.find_node(u2);
  if (!node2) {
    report.inconclusive("truncation-insufficient: u2 is not visible in the ball");
    return report;
  }
  std::size_t decided = 0;
  std::size_t in13 = 0;
  std::size_t only12 = 0;
  std::size_t only23 = 0;
  bool window = false;  // a decided run holding two points of Lambda_13
  std::size_t run13 = 0;
  std::optional<BigInt> previous;
  std::optional<BsElement> witness12;
  std::optional<BsElement> witness23;
  for (std::uint32_t v : graph.points(*node2)) {
    const BsElement& y = graph.ball().vertices()[v];
    auto meets1 = probe.meets(y, -as_offset(d12), u1);
    auto meets3 = probe.meets(y, as_offset(d23), u3);
    if (!meets1 || !meets3) {
      previous.reset();
      run13 = 0;
      continue;
    }
    if (!previous || y.tail() != *previous + 1) run13 = 0;
    previous = y.tail();
    ++decided;
    if (*meets1 && *meets3) {
      ++in13;
      if (++run13 >= 2) window = true;
    } else if (*meets1) {
      ++only12;
      if (!witness12) witness12 = y;
    } else if (*meets3) {
      ++only23;
      if (!witness23) witness23 = y;
    }
  }
  report.stats["decided"] = decided;
  report.stats["lambda13"] = in13;
  report.stats["lambda12_only"] = only12;
  report.stats["lambda23_only"] = only23;

  // every t-line through u1 and u3 passes through u2
  std::size_t convex_checked = 0;
  if (auto node1 = graph.find_node(u1)) {
    for (std::uint32_t v : graph.points(*node1)) {
      const BsElement& x = graph.ball().vertices()[v];
      auto reaches3 = probe.meets(x, as_offset(d13), u3);
      if (!reaches3 || !*reaches3) continue;
      ++convex_checked;
      if (!*probe.meets(x, as_offset(d12), u2)) {
        report.violate({"convexity", {{"point", to_json(x)}}});
      }
    }
  }
  report.stats["convexity_checked"] = convex_checked;

  if (in13 == 0) {
    report.inconclusive("truncation-insufficient: no decided point of Lambda_13 on u2");
    return report;
  }
  if (witness12) {
    report.stats["lambda13_vs_lambda12"] = "strict";
    report.witnesses.push_back({"lambda12-not-lambda13", {{"point", to_json(*witness12)}}});
  } else if (window) {
    report.violate({"lambda13-equals-lambda12", {{"u2", to_json(u2)}}});
  } else {
    report.inconclusive("truncation-insufficient: no decided window between two Lambda_13 points");
  }
  if (bp.p > 1) {
    if (witness23) {
      report.stats["lambda13_vs_lambda23"] = "strict";
      report.witnesses.push_back({"lambda23-not-lambda13", {{"point", to_json(*witness23)}}});
    } else if (window) {
      report.violate({"lambda13-equals-lambda23", {{"u2", to_json(u2)}}});
    } else {
      report.inconclusive("truncation-insufficient: no decided window between two Lambda_13 points");
    }
  } else if (witness23) {
    report.violate({"lambda13-strictly-inside-lambda23", {{"point", to_json(*witness23)}}});
  } else if (window) {
    report.stats["lambda13_vs_lambda23"] = "equal";
  } else {
    report.inconclusive("truncation-insufficient: no decided window between two Lambda_13 points");
  }
  return report;
}

AdjacencyResult adjacency_predicate(const LambdaGraph& graph, const StandardLine& u1, const StandardLine& u2,
                                    const AdjacencyOptions& options) {
  const Pair pair = orient(u1, u2);
  const BsParams& bp = graph.params();
  const bool pair_form = bp.m_divides_n();
  const std::int64_t d = as_offset(pair.d);
  const int radius = options.search_radius;

  AdjacencyResult result;
  Report& report = result.report;
  report.check = "adjacency";
  report.stats["form"] = pair_form ? "pair" : "single";
  report.stats["distance"] = pair.d;
  report.stats["search_radius"] = radius;
  report.notes.push_back("u3" + std::string(pair_form ? ",u4" : "") +
                         " searched among a-lines met by one Lambda_12 t-line at offsets in [-" +
                         std::to_string(radius) + ", d+" + std::to_string(radius) + "]");

  if (!has_common_t_line(pair.low, pair.high, pair.d)) {
    report.stats["lambda12_empty"] = true;
    result.predicate = false;
    if (!pair_form) {
      // any third vertex contains the empty intersection; take one between them
      const TreeVertex hv = bass_serre_address(pair.high);
      const TreeVertex mid = step_towards(hv, bass_serre_address(pair.low));
      result.witness.push_back(line_of(element_of_address(bp, mid), Label::a));
    }
    report.stats["predicate"] = false;
    return result;
  }
  report.stats["lambda12_empty"] = false;

  auto low_node = graph.find_node(pair.low);
  if (!low_node) throw TruncationError("truncation-insufficient: lines are not visible in the ball");
  const Probe probe(graph);

  // Evaluates the predicate from one base point y0 of Lambda_12 on the low line.
  struct Outcome {
    bool predicate;
    std::vector<StandardLine> witness;
  };
  auto evaluate = [&](const BsElement& y0) -> std::optional<Outcome> {
    auto g12 = first_member(probe, y0, d, pair.high, options.scan_limit);
    if (!g12) return std::nullopt;
    std::vector<std::int64_t> offsets;
    std::vector<StandardLine> targets;
    bool undecided = false;
    for (std::int64_t i = -radius; i <= d + radius; ++i) {
      if (i == 0 || i == d) continue;
      StandardLine target = line_of(times_t(y0, i), Label::a);
      // the AP of t-lines meeting the candidate contains y0; one more
      // Lambda_12 member in it gives the whole of Lambda_12
      std::optional<bool> included;
      for (int sign : {1, -1}) {
        auto r = probe.meets(times_a(y0, *g12 * sign), i, target);
        if (r) {
          included = r;
          break;
        }
      }
      if (!included) {
        undecided = true;
        continue;
      }
      if (!*included) continue;
      if (!pair_form) return Outcome{false, {target}};
      offsets.push_back(i);
      targets.push_back(std::move(target));
    }
    if (!pair_form) {
      if (undecided) return std::nullopt;
      return Outcome{true, {}};
    }
    for (std::size_t a = 0; a < offsets.size(); ++a) {
      const BsElement z0 = times_t(y0, offsets[a]);
      for (std::size_t b = 0; b < offsets.size(); ++b) {
        for (std::int64_t o : {std::int64_t{0}, d}) {
          const StandardLine& ui = o == 0 ? pair.low : pair.high;
          auto equal = same_gap(probe, z0, offsets[b] - offsets[a], targets[b], o - offsets[a], ui, options.scan_limit);
          if (!equal) {
            undecided = true;
          } else if (*equal) {
            return Outcome{false, {targets[a], targets[b]}};
          }
        }
      }
    }
    if (undecided) return std::nullopt;
    return Outcome{true, {}};
  };

  std::size_t bases_tried = 0;
  for (std::uint32_t v : graph.points(*low_node)) {
    const BsElement& y0 = graph.ball().vertices()[v];
    auto base = probe.meets(y0, d, pair.high);
    if (!base || !*base) continue;
    ++bases_tried;
    if (auto outcome = evaluate(y0)) {
      result.predicate = outcome->predicate;
      result.witness = std::move(outcome->witness);
      report.stats["predicate"] = result.predicate;
      report.stats["bases_tried"] = bases_tried;
      report.stats["base"] = to_json(y0);
      if (result.predicate) report.notes.push_back("certified true within the search region only");
      return result;
    }
  }
  throw TruncationError("truncation-insufficient: the bounded search could not certify either branch");
}

std::pair<std::size_t, std::size_t> count_strongly_comparable(const LambdaGraph& graph, const StandardLine& u1,
                                                              const StandardLine& u2) {
  require_a_line(u1, "u1");
  require_a_line(u2, "u2");
  const TreeVertex v1 = bass_serre_address(u1);
  const TreeVertex v2 = bass_serre_address(u2);
  if (tree_order(v1, v2) != TreeOrder::greater || tree_distance(v1, v2) != 1) {
    throw ValidationError("count_strongly_comparable needs u1 > u2 adjacent in the tree");
  }
  const BsParams& bp = graph.params();
  const BigInt window = boost::multiprecision::lcm(BigInt(bp.abs_m()), BigInt(bp.abs_n()));
  const CayleyBall& ball = graph.ball();

  // V on `line`: lines(x t^away) over points x with x t^toward on `other`
  auto collect = [&](const StandardLine& line, const StandardLine& other, int toward) {
    auto node = graph.find_node(line);
    if (!node) throw TruncationError("truncation-insufficient: line is not visible in the ball");
    LineSet found;
    std::size_t run = 0;
    std::size_t best = 0;
    std::optional<BigInt> previous;
    for (std::uint32_t v : graph.points(*node)) {
      const BsElement& x = ball.vertices()[v];
      BsElement back = times_t(x, toward);
      BsElement away = times_t(x, -toward);
      if (!ball.contains(back) || !ball.contains(away)) {
        run = 0;
        previous.reset();
        continue;
      }
      run = (previous && x.tail() == *previous + 1) ? run + 1 : 1;
      previous = x.tail();
      best = std::max(best, run);
      if (back.without_tail() == other.rep) found.insert(line_of(away, Label::a));
    }
    if (BigInt(best) < window) {
      throw TruncationError("truncation-insufficient: neighbourhood of the line is not fully visible");
    }
    return found.size();
  };
  return {collect(u1, u2, -1), collect(u2, u1, 1)};
}

Report type_detection_witness(const LambdaGraph& graph, const StandardLine& u, std::size_t search_bound) {
  Report report;
  report.check = "type_detection";
  report.stats["type"] = std::string(1, label_char(u.label));
  report.stats["radius"] = graph.ball().radius();
  auto node = graph.find_node(u);
  if (!node) {
    report.inconclusive("truncation-insufficient: the visible link of u is empty");
    return report;
  }
  const CayleyBall& ball = graph.ball();

  if (u.label == Label::a) {
    const std::vector<StandardLine> cover = tree_in_neighbors(u);
    LineSet cover_set(cover.begin(), cover.end());
    std::size_t decided = 0;
    std::size_t undecided = 0;
    for (std::uint32_t v : graph.points(*node)) {
      BsElement below = times_t(ball.vertices()[v], -1);
      if (!ball.contains(below)) {
        ++undecided;
        continue;
      }
      ++decided;
      if (!cover_set.count(line_of(below, Label::a))) {
        report.violate({"uncovered", {{"point", to_json(ball.vertices()[v])}}});
      }
    }
    json cover_json = json::array();
    for (const StandardLine& w : cover) cover_json.push_back(to_json(w));
    report.witnesses.push_back({"covering-set", {{"lines", cover_json}}});
    report.stats["cover_size"] = cover.size();
    report.stats["decided"] = decided;
    report.stats["undecided"] = undecided;
    if (decided == 0) report.inconclusive("truncation-insufficient: no link vertex is decided");
    return report;
  }

  // type t: the visible link, then every visible t-line at distance 2
  std::vector<StandardLine> link;
  std::vector<TreeVertex> link_addresses;
  for (std::uint32_t a : graph.link_of(*node)) {
    link.push_back(graph.nodes()[a]);
    link_addresses.push_back(bass_serre_address(graph.nodes()[a]));
  }
  std::vector<std::uint32_t> candidates;
  {
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t a : graph.link_of(*node)) {
      for (std::uint32_t t : graph.link_of(a)) {
        if (t != *node && seen.insert(t).second) candidates.push_back(t);
      }
    }
    std::sort(candidates.begin(), candidates.end());
  }
  // exact incidence of each candidate t-line with each link a-line
  std::vector<boost::dynamic_bitset<>> covers;
  covers.reserve(candidates.size());
  for (std::uint32_t c : candidates) {
    const BsElement& y0 = graph.nodes()[c].rep;
    const TreeVertex base = tree_vertex_of(y0);
    boost::dynamic_bitset<> bits(link.size());
    for (std::size_t i = 0; i < link.size(); ++i) {
      const std::int64_t dist = as_offset(tree_distance(base, link_addresses[i]));
      for (std::int64_t s : {dist, -dist}) {
        if (times_t(y0, s).without_tail() == link[i].rep) bits.set(i);
      }
    }
    covers.push_back(std::move(bits));
  }

  std::vector<std::size_t> chosen;
  std::function<bool(const boost::dynamic_bitset<>&)> search = [&](const boost::dynamic_bitset<>& uncovered) {
    if (uncovered.none()) return true;
    if (chosen.size() == search_bound) return false;
    const std::size_t first = uncovered.find_first();
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (!covers[c].test(first)) continue;
      chosen.push_back(c);
      if (search(uncovered - covers[c])) return true;
      chosen.pop_back();
    }
    return false;
  };
  boost::dynamic_bitset<> all(link.size());
  all.set();
  const bool found = search(all);
  report.stats["link_size"] = link.size();
  report.stats["candidates"] = candidates.size();
  report.stats["search_bound"] = search_bound;
  report.notes.push_back("bounded refutation over visible distance-2 t-lines; completeness is not claimed");
  if (found) {
    json lines = json::array();
    for (std::size_t c : chosen) lines.push_back(to_json(graph.nodes()[candidates[c]]));
    report.witnesses.push_back({"visible-cover", {{"lines", lines}}});
    report.inconclusive("a cover of the visible link exists; a larger radius is needed to refute");
  }
  return report;
}

Report malnormal_check(const CayleyBall& ball, int exponent_bound) {
  Report report;
  report.check = "malnormal";
  const BsParams& bp = ball.params();
  std::size_t checks = 0;
  for (const BsElement& g : ball.vertices()) {
    const bool g_in_t = subgroup_membership(g, Label::t).has_value();
    const BsElement g_inv = invert(g);
    for (int j = -exponent_bound; j <= exponent_bound; ++j) {
      if (j == 0) continue;
      checks += 2;
      BsElement conj_t = multiply(multiply(g, power_of(bp, Label::t, j)), g_inv);
      if (!g_in_t && subgroup_membership(conj_t, Label::t)) {
        report.violate({"t-conjugate", {{"g", to_json(g)}, {"j", j}}});
      }
      BsElement conj_a = multiply(multiply(g, power_of(bp, Label::a, j)), g_inv);
      if (subgroup_membership(conj_a, Label::t)) {
        report.violate({"elliptic-in-t", {{"g", to_json(g)}, {"j", j}}});
      }
    }
  }
  report.stats["elements"] = ball.size();
  report.stats["exponent_bound"] = exponent_bound;
  report.stats["checks"] = checks;
  return report;
}

}  // namespace hgrig
