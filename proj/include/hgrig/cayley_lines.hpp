#pragma once

// Finite Cayley balls of BS(m,n), standard lines, the line graph Lambda and
// the Bass-Serre tree with its orientation order.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgrig/bs_algebra.hpp"
#include "hgrig/caps.hpp"

namespace hgrig {

struct CayleyEdge {
  std::uint32_t source = 0;
  std::uint32_t target = 0;  // target = source * label
  Label label = Label::a;

  friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

/// All elements of word length <= radius, in breadth-first order (each level
/// expanded in the order a, a^-1, t, t^-1 from its parents in order).
class CayleyBall {
 public:
  CayleyBall(const BsParams& params, int radius) : params_(params), radius_(radius) {}

  const BsParams& params() const { return params_; }
  int radius() const { return radius_; }
  const std::vector<BsElement>& vertices() const { return vertices_; }
  const std::vector<int>& depth() const { return depth_; }
  const std::vector<CayleyEdge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }

  std::optional<std::uint32_t> find(const BsElement& x) const;
  bool contains(const BsElement& x) const { return index_.count(x) != 0; }
  /// Interior vertices have all four neighbours inside the ball.
  bool interior(std::uint32_t v) const { return depth_[v] < radius_; }

  /// Appends a vertex; used by the builder and by deserialization.
  std::uint32_t add_vertex(BsElement x, int depth);
  /// Recomputes the edge list from the vertex set.
  void rebuild_edges();

  friend bool operator==(const CayleyBall& x, const CayleyBall& y) {
    return x.params_ == y.params_ && x.radius_ == y.radius_ && x.vertices_ == y.vertices_ &&
           x.depth_ == y.depth_ && x.edges_ == y.edges_;
  }

 private:
  BsParams params_;
  int radius_;
  std::vector<BsElement> vertices_;
  std::vector<int> depth_;
  std::vector<CayleyEdge> edges_;
  std::unordered_map<BsElement, std::uint32_t, BsElementHash> index_;
};

struct BallOptions {
  std::size_t vertex_cap = default_caps().vertices;
  unsigned threads = 1;
};

/// Breadth-first closure; throws ResourceCapError beyond the vertex cap.
CayleyBall ball(const BsParams& params, int radius, const BallOptions& options = {});

// ---------------------------------------------------------------------------
// Standard lines

struct StandardLine {
  Label label = Label::a;
  BsElement rep;
  bool truncated = false;

  friend bool operator==(const StandardLine& x, const StandardLine& y) {
    return x.label == y.label && x.rep == y.rep;
  }
};

struct StandardLineHash {
  std::size_t operator()(const StandardLine& line) const {
    return line.rep.hash() * 2 + static_cast<std::size_t>(line.label);
  }
};

/// Canonical representative of g<t> together with the offset j such that
/// g = rep * t^j. The representative has the fewest syllables in the coset.
std::pair<BsElement, std::int64_t> t_line_rep(const BsElement& g);

/// a-line rep: the coset element with tail 0. t-line rep: see t_line_rep.
StandardLine line_of(const BsElement& g, Label label);

// ---------------------------------------------------------------------------
// The line graph

struct LambdaLink {
  std::uint32_t a_node = 0;
  std::uint32_t t_node = 0;
  std::uint32_t vertex = 0;  // ball vertex lying on both lines

  friend bool operator==(const LambdaLink&, const LambdaLink&) = default;
};

class LambdaGraph {
 public:
  explicit LambdaGraph(CayleyBall ball) : ball_(std::move(ball)) {}

  const CayleyBall& ball() const { return ball_; }
  const BsParams& params() const { return ball_.params(); }
  const std::vector<StandardLine>& nodes() const { return nodes_; }
  /// One link per ball vertex, in ball order.
  const std::vector<LambdaLink>& links() const { return links_; }
  /// Offset j with vertex = rep(t-line) * t^j.
  std::int64_t t_offset(std::uint32_t vertex) const { return t_offsets_[vertex]; }
  /// Ball vertices on a node, sorted by position along the line.
  const std::vector<std::uint32_t>& points(std::uint32_t node) const { return points_[node]; }

  std::optional<std::uint32_t> find_node(const StandardLine& line) const;
  std::uint32_t node_of(std::uint32_t vertex, Label label) const {
    return label == Label::a ? links_[vertex].a_node : links_[vertex].t_node;
  }
  /// Ball vertex where the two lines meet, if it is visible.
  std::optional<std::uint32_t> meeting(std::uint32_t a_node, std::uint32_t t_node) const;
  /// Nodes linked to `node` (the visible part of lk(node)).
  std::vector<std::uint32_t> link_of(std::uint32_t node) const;

  /// Appends a node / link; used by lambda_graph and deserialization.
  std::uint32_t add_node(StandardLine line);
  void add_link(LambdaLink link, std::int64_t t_offset);
  void finalize();
  void mark_truncated(std::uint32_t node) { nodes_[node].truncated = true; }

  friend bool operator==(const LambdaGraph& x, const LambdaGraph& y) {
    return x.ball_ == y.ball_ && x.nodes_ == y.nodes_ && x.links_ == y.links_ && x.t_offsets_ == y.t_offsets_;
  }

 private:
  CayleyBall ball_;
  std::vector<StandardLine> nodes_;
  std::vector<LambdaLink> links_;
  std::vector<std::int64_t> t_offsets_;
  std::vector<std::vector<std::uint32_t>> points_;
  std::unordered_map<StandardLine, std::uint32_t, StandardLineHash> node_index_;
  std::unordered_map<std::uint64_t, std::uint32_t> meeting_;
};

LambdaGraph lambda_graph(CayleyBall ball);

/// Position of a ball vertex along its line: the tail for a-lines, the t-offset
/// for t-lines.
BigInt position_on_line(const LambdaGraph& graph, std::uint32_t vertex, Label label);

// ---------------------------------------------------------------------------
// Bass-Serre tree

struct TreeVertex {
  std::vector<std::pair<std::int64_t, int>> address;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

enum class TreeOrder { equal, less, greater, incomparable };

std::string to_string(TreeOrder order);

/// Throws ValidationError for t-lines.
TreeVertex bass_serre_address(const StandardLine& line);
TreeVertex tree_vertex_of(const BsElement& g);
std::size_t tree_distance(const TreeVertex& v1, const TreeVertex& v2);
/// less means every geodesic edge points from v1 towards v2.
TreeOrder tree_order(const TreeVertex& v1, const TreeVertex& v2);

/// The |n| out-neighbours line(rep a^r t) and |m| in-neighbours line(rep a^r t^-1).
std::vector<StandardLine> tree_out_neighbors(const StandardLine& line);
std::vector<StandardLine> tree_in_neighbors(const StandardLine& line);

/// Rebuilds the a-line representative from an address.
BsElement element_of_address(const BsParams& params, const TreeVertex& vertex);

}  // namespace hgrig
