#include <algorithm>

#include "hgrig/cayley_lines.hpp"
#include "hgrig/error.hpp"

namespace hgrig {

std::pair<BsElement, std::int64_t> t_line_rep(const BsElement& g) {
  // Along g<t> the syllable count is the tree distance from the base vertex
  // to the points of a geodesic, so it has a unique minimum.
  BsElement current = g;
  std::int64_t walked = 0;
  int direction = 0;
  for (int sign : {1, -1}) {
    BsElement probe = current;
    probe.append_t(sign);
    if (probe.syllable_count() < current.syllable_count()) {
      direction = sign;
      current = std::move(probe);
      walked += sign;
      break;
    }
  }
  while (direction != 0) {
    BsElement probe = current;
    probe.append_t(direction);
    if (probe.syllable_count() >= current.syllable_count()) break;
    current = std::move(probe);
    walked += direction;
  }
  return {std::move(current), -walked};
}

StandardLine line_of(const BsElement& g, Label label) {
  if (label == Label::a) return {Label::a, g.without_tail(), false};
  return {Label::t, t_line_rep(g).first, false};
}

std::optional<std::uint32_t> LambdaGraph::find_node(const StandardLine& line) const {
  auto it = node_index_.find(line);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> LambdaGraph::meeting(std::uint32_t a_node, std::uint32_t t_node) const {
  auto it = meeting_.find((std::uint64_t{a_node} << 32) | t_node);
  if (it == meeting_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> LambdaGraph::link_of(std::uint32_t node) const {
  const Label other = nodes_[node].label == Label::a ? Label::t : Label::a;
  std::vector<std::uint32_t> out;
  out.reserve(points_[node].size());
  for (std::uint32_t v : points_[node]) out.push_back(node_of(v, other));
  return out;
}

std::uint32_t LambdaGraph::add_node(StandardLine line) {
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  auto [it, inserted] = node_index_.emplace(line, id);
  if (!inserted) throw ValidationError("duplicate Lambda node " + to_string(line.rep));
  nodes_.push_back(std::move(line));
  return id;
}

void LambdaGraph::add_link(LambdaLink link, std::int64_t t_offset) {
  if (link.vertex != links_.size()) throw ValidationError("Lambda links must follow ball order");
  links_.push_back(link);
  t_offsets_.push_back(t_offset);
}

void LambdaGraph::finalize() {
  if (links_.size() != ball_.size()) throw ValidationError("Lambda graph needs exactly one link per ball vertex");
  points_.assign(nodes_.size(), {});
  meeting_.clear();
  for (const LambdaLink& link : links_) {
    if (link.a_node >= nodes_.size() || link.t_node >= nodes_.size() || nodes_[link.a_node].label != Label::a ||
        nodes_[link.t_node].label != Label::t) {
      throw ValidationError("Lambda link joins nodes of the wrong type");
    }
    points_[link.a_node].push_back(link.vertex);
    points_[link.t_node].push_back(link.vertex);
    auto [it, inserted] = meeting_.emplace((std::uint64_t{link.a_node} << 32) | link.t_node, link.vertex);
    if (!inserted) throw InternalError("two standard lines meet in more than one ball vertex");
  }
  for (std::uint32_t node = 0; node < nodes_.size(); ++node) {
    const Label label = nodes_[node].label;
    auto& pts = points_[node];
    std::sort(pts.begin(), pts.end(), [&](std::uint32_t x, std::uint32_t y) {
      if (label == Label::a) return ball_.vertices()[x].tail() < ball_.vertices()[y].tail();
      return t_offsets_[x] < t_offsets_[y];
    });
  }
}

LambdaGraph lambda_graph(CayleyBall ball) {
  LambdaGraph graph(std::move(ball));
  const CayleyBall& b = graph.ball();
  for (std::uint32_t v = 0; v < b.size(); ++v) {
    const BsElement& x = b.vertices()[v];
    StandardLine a_line = line_of(x, Label::a);
    auto [t_rep, offset] = t_line_rep(x);
    StandardLine t_line{Label::t, std::move(t_rep), false};
    std::uint32_t a_node = graph.find_node(a_line).value_or(UINT32_MAX);
    if (a_node == UINT32_MAX) a_node = graph.add_node(std::move(a_line));
    std::uint32_t t_node = graph.find_node(t_line).value_or(UINT32_MAX);
    if (t_node == UINT32_MAX) t_node = graph.add_node(std::move(t_line));
    graph.add_link({a_node, t_node, v}, offset);
  }
  graph.finalize();
  // a line is truncated when one of its visible points has a line neighbour
  // outside the ball
  std::vector<bool> truncated(graph.nodes().size(), false);
  for (std::uint32_t v = 0; v < b.size(); ++v) {
    if (b.interior(v)) continue;
    for (Label label : {Label::a, Label::t}) {
      for (int sign : {1, -1}) {
        BsElement y = b.vertices()[v];
        if (label == Label::a) {
          y.append_a(sign);
        } else {
          y.append_t(sign);
        }
        if (!b.contains(y)) truncated[graph.node_of(v, label)] = true;
      }
    }
  }
  for (std::uint32_t node = 0; node < graph.nodes().size(); ++node) {
    if (truncated[node]) graph.mark_truncated(node);
  }
  return graph;
}

BigInt position_on_line(const LambdaGraph& graph, std::uint32_t vertex, Label label) {
  if (label == Label::a) return graph.ball().vertices()[vertex].tail();
  return BigInt(graph.t_offset(vertex));
}

}  // namespace hgrig
