#include "hgrig/exotic.hpp"

#include <unordered_map>
#include <unordered_set>

#include "hgrig/error.hpp"
#include "hgrig/serialize.hpp"

namespace hgrig {

namespace {

void require_bs12(const BsParams& params) {
  if (!(params == make_params(1, 2))) throw ValidationError("the exotic bijection lives on BS(1,2), got " + to_string(params));
}

BsElement left_shift(const BsElement& v, const BigInt& e) { return multiply(power_of(v.params(), Label::a, e), v); }

json pair_json(const BsElement& x, const BsElement& y, const ExoticParams& params) {
  return json{{"x", to_json(x)}, {"y", to_json(y)}, {"phi_x", to_json(phi(x, params))}, {"phi_y", to_json(phi(y, params))}};
}

/// x < y = x a^k with k > 0 on one a-line, images on one a-line in the
/// opposite order.
bool order_violated(const BsElement& x, const BsElement& y, const ExoticParams& params) {
  const BsElement px = phi(x, params);
  const BsElement py = phi(y, params);
  return px.without_tail() == py.without_tail() && px.tail() > py.tail();
}

}  // namespace

ExoticParams make_exotic_params(unsigned n) { return {n, pow(2, n)}; }

std::string to_string(Height height) { return height == Height::high ? "high" : "low"; }

Height classify(const BsElement& v, const ExoticParams& params) {
  require_bs12(v.params());
  // the t-line is a^j<t> exactly when its fewest-syllable point is a power of a
  const BsElement rep = t_line_rep(v).first;
  if (rep.syllable_count() == 0 && rep.tail() % params.shift == 0) return Height::high;
  return Height::low;
}

BsElement phi(const BsElement& v, const ExoticParams& params) {
  return classify(v, params) == Height::high ? v : left_shift(v, params.shift);
}

BsElement phi_inverse(const BsElement& v, const ExoticParams& params) {
  // phi keeps the height of every t-line
  return classify(v, params) == Height::high ? v : left_shift(v, -params.shift);
}

Report verify_exotic(const CayleyBall& ball, const ExoticParams& params) {
  require_bs12(ball.params());
  Report report;
  report.check = "exotic";
  report.stats["n"] = params.n;
  report.stats["radius"] = ball.radius();

  std::size_t high = 0;
  std::unordered_map<BsElement, std::uint32_t, BsElementHash> image_of;
  for (std::uint32_t v = 0; v < ball.size(); ++v) {
    const BsElement& x = ball.vertices()[v];
    if (classify(x, params) == Height::high) ++high;
    BsElement y = phi(x, params);
    if (phi_inverse(y, params) != x) report.violate({"inverse", {{"x", to_json(x)}}});
    auto [it, inserted] = image_of.emplace(std::move(y), v);
    if (!inserted) report.violate({"not-injective", {{"x", to_json(x)}, {"y", to_json(ball.vertices()[it->second])}}});
  }
  report.stats["high"] = high;
  report.stats["low"] = ball.size() - high;

  // a-lines land on a-lines, t-lines on t-lines
  std::unordered_map<StandardLine, StandardLine, StandardLineHash> line_image;
  std::size_t lines = 0;
  for (std::uint32_t v = 0; v < ball.size(); ++v) {
    const BsElement& x = ball.vertices()[v];
    const BsElement y = phi(x, params);
    for (Label label : {Label::a, Label::t}) {
      auto [it, inserted] = line_image.emplace(line_of(x, label), line_of(y, label));
      if (inserted) {
        ++lines;
      } else if (!(it->second == line_of(y, label))) {
        report.violate({label == Label::a ? "a-line-split" : "t-line-split", {{"x", to_json(x)}}});
      }
    }
  }
  report.stats["lines"] = lines;
  std::unordered_set<StandardLine, StandardLineHash> targets;
  for (const auto& [source, target] : line_image) {
    if (!targets.insert(target).second) report.violate({"lines-merged", {{"line", to_json(target)}}});
  }

  // order along t-lines: phi(x t) = phi(x) t for every visible t-edge
  std::size_t t_edges = 0;
  for (const CayleyEdge& e : ball.edges()) {
    if (e.label != Label::t) continue;
    ++t_edges;
    BsElement step = phi(ball.vertices()[e.source], params);
    step.append_t(1);
    if (step != phi(ball.vertices()[e.target], params)) {
      report.violate({"t-order", {{"x", to_json(ball.vertices()[e.source])}}});
    }
  }
  report.stats["t_edges"] = t_edges;

  // a-line order violation: closed form on the base line, then a scan
  std::optional<json> witness;
  const BsParams& bp = ball.params();
  const BsElement x = power_of(bp, Label::a, params.shift - 1);
  const BsElement y = power_of(bp, Label::a, params.shift);
  if (ball.contains(x) && ball.contains(y) && order_violated(x, y, params)) {
    witness = pair_json(x, y, params);
    report.stats["witness_search"] = "base line";
  }
  if (!witness) {
    for (const CayleyEdge& e : ball.edges()) {
      if (e.label != Label::a) continue;
      const BsElement& p = ball.vertices()[e.source];
      const BsElement& q = ball.vertices()[e.target];
      if (order_violated(p, q, params)) {
        witness = pair_json(p, q, params);
        report.stats["witness_search"] = "scan";
        break;
      }
    }
  }
  if (witness) {
    report.witnesses.push_back({"a-order-violation", *witness});
  } else {
    report.inconclusive("truncation-insufficient: no a-line order violation visible");
  }
  return report;
}

}  // namespace hgrig
