#pragma once

// Generalized Higman groups
//
//     Hig_sigma = < a_1..a_k | a_i a_{i+1}^{m_i} a_i^-1 = a_{i+1}^{n_i} >
//
// and finite truncations of their developed polygonal complex X_sigma. Types
// and generator indices are 0-based internally (a_1 is index 0).
//
// A type-i vertex gG_i has group G_i = <a_{i-1}, a_i>, a copy of BS(pair i-1)
// with t = a_{i-1} and a = a_i. A type-i edge g<a_i> runs from the type-i
// vertex (where it is an a-line) to the type-(i+1) vertex (a t-line there).
// A 2-cell is a coset g, with vertices gG_0 .. gG_{k-1}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hgrig/bs_algebra.hpp"
#include "hgrig/caps.hpp"
#include "hgrig/report.hpp"

namespace hgrig {

struct Sigma {
  /// pairs[i] relates a_i and a_{i+1}; canonical BsParams (0 < m < |n|).
  std::vector<BsParams> pairs;

  std::size_t k() const { return pairs.size(); }
  friend bool operator==(const Sigma&, const Sigma&) = default;
};

/// Rejects k < 4, zero entries and |m| = |n|. A pair with |m| > |n| is
/// swapped, which replaces a_i by its inverse.
Sigma make_sigma(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs);
/// Parses "m1,n1;m2,n2;...".
Sigma parse_sigma(std::string_view text);
std::string to_string(const Sigma& sigma);

/// The Baumslag-Solitar parameters of a type-i vertex group.
const BsParams& vertex_group(const Sigma& sigma, std::size_t type);

struct FSigma {
  std::size_t k = 0;
  std::vector<std::size_t> translations;  // sorted, always contains 0

  bool contains(std::size_t tau) const;
  friend bool operator==(const FSigma&, const FSigma&) = default;
};

FSigma f_sigma(const Sigma& sigma);

// ---------------------------------------------------------------------------
// Developed balls

struct HigVertex {
  std::uint32_t type = 0;
  bool interior = false;

  friend bool operator==(const HigVertex&, const HigVertex&) = default;
};

/// Oriented from the type-i source to the type-(i+1) target.
struct HigEdge {
  std::uint32_t type = 0;
  std::uint32_t source = 0;
  std::uint32_t target = 0;

  friend bool operator==(const HigEdge&, const HigEdge&) = default;
};

struct HigCell {
  std::vector<std::uint32_t> vertices;  // vertices[i] has type i
  std::vector<std::uint32_t> edges;     // edges[i] has type i
  int level = 0;                        // chart steps from the base cell
  bool interior = false;                // all k stars expanded around it

  friend bool operator==(const HigCell&, const HigCell&) = default;
};

/// The cell sitting at `position` of a vertex chart: cell = base * position.
struct ChartEntry {
  std::uint32_t cell = 0;
  BsElement position;

  friend bool operator==(const ChartEntry&, const ChartEntry&) = default;
};

class DevelopedBall {
 public:
  DevelopedBall(Sigma sigma, int r, int s) : sigma_(std::move(sigma)), r_(r), s_(s) {}

  const Sigma& sigma() const { return sigma_; }
  std::size_t k() const { return sigma_.k(); }
  int r() const { return r_; }
  int s() const { return s_; }
  static constexpr std::uint32_t base_cell = 0;

  const std::vector<HigVertex>& vertices() const { return vertices_; }
  const std::vector<HigEdge>& edges() const { return edges_; }
  const std::vector<HigCell>& cells() const { return cells_; }
  /// Chart of a vertex, sorted by cell id.
  const std::vector<ChartEntry>& chart(std::uint32_t vertex) const { return charts_[vertex]; }

  std::optional<std::uint32_t> cell_at(std::uint32_t vertex, const BsElement& position) const;
  const BsElement& position(std::uint32_t vertex, std::uint32_t cell) const;
  /// Edges at a vertex: out-edges (type = vertex type) and in-edges.
  const std::vector<std::uint32_t>& incident_edges(std::uint32_t vertex) const { return incident_[vertex]; }
  std::optional<std::uint32_t> edge_between(std::uint32_t v1, std::uint32_t v2) const;

  // Construction; used by build_ball and deserialization.
  std::uint32_t add_vertex(HigVertex vertex);
  std::uint32_t add_edge(HigEdge edge);
  std::uint32_t add_cell(HigCell cell);
  void add_chart_entry(std::uint32_t vertex, ChartEntry entry);
  /// Sorts charts and rebuilds the lookup tables.
  void finalize();

  friend bool operator==(const DevelopedBall& x, const DevelopedBall& y) {
    return x.sigma_ == y.sigma_ && x.r_ == y.r_ && x.s_ == y.s_ && x.vertices_ == y.vertices_ &&
           x.edges_ == y.edges_ && x.cells_ == y.cells_ && x.charts_ == y.charts_;
  }

 private:
  Sigma sigma_;
  int r_;
  int s_;
  std::vector<HigVertex> vertices_;
  std::vector<HigEdge> edges_;
  std::vector<HigCell> cells_;
  std::vector<std::vector<ChartEntry>> charts_;
  std::vector<std::unordered_map<BsElement, std::uint32_t, BsElementHash>> at_;
  std::vector<std::unordered_map<std::uint32_t, std::uint32_t>> slot_of_;  // cell -> chart index
  std::vector<std::vector<std::uint32_t>> incident_;
  std::unordered_map<std::uint64_t, std::uint32_t> edge_index_;
};

struct BuildOptions {
  std::size_t cell_cap = default_caps().cells;
  std::size_t vertex_cap = default_caps().vertices;
  unsigned threads = 1;
};

/// Breadth-first development from the base cell: a cell of level < r is
/// expanded at each of its k vertices by the chart positions p*h with h of
/// word length <= s. Throws ResourceCapError beyond the caps and
/// InternalError on a chart inconsistency.
DevelopedBall build_ball(const Sigma& sigma, int r, int s, const BuildOptions& options = {});

/// Link of a vertex: nodes are incident edges, links are the cells at it.
struct LinkGraph {
  std::uint32_t vertex = 0;
  std::vector<std::uint32_t> nodes;  // edge ids
  std::vector<bool> out;             // node is an out-edge
  std::vector<std::pair<std::uint32_t, std::uint32_t>> links;  // node indices, out-node first
  std::vector<std::uint32_t> link_cells;
};

/// Throws TruncationError for boundary vertices.
LinkGraph link_of(const DevelopedBall& ball, std::uint32_t vertex);
bool is_bipartite(const LinkGraph& link);
/// Length of a shortest cycle (2 for a double link); nullopt for a forest.
std::optional<std::size_t> girth(const LinkGraph& link);

/// Interior links: bipartite, girth >= 4, and the s-truncated line graph of
/// the vertex group embedded around every expanded cell.
Report check_links(const DevelopedBall& ball, unsigned threads = 1);
/// Every cell meets each vertex and edge type once, in cyclic order; edges
/// are oriented by type; distinct cells share at most one edge.
Report check_quotient(const DevelopedBall& ball);

/// SHA-256 (hex) of the canonical JSON serialization.
std::string ball_hash(const DevelopedBall& ball);

enum class StabilizerClass { trivial, nontrivial_adjacent, nontrivial_common_source };

std::string to_string(StabilizerClass c);

/// A vertex is `margin`-deep when it lies on a cell of level <= r - margin.
std::vector<bool> deep_vertices(const DevelopedBall& ball, int margin);

/// Adjacency, then a common neighbour x with both edges leaving x. A
/// negative verdict needs both vertices `margin`-deep, else TruncationError.
StabilizerClass stabilizer_intersection_class(const DevelopedBall& ball, std::uint32_t v1, std::uint32_t v2,
                                              int margin = 2);

/// a_i^N lying in both a_{i-1}^{s1} <a_i> a_{i-1}^{-s1} and the s2 conjugate,
/// with N minimal; computed in the type-i vertex group (t = a_{i-1}, a = a_i).
struct CommonPowerWitness {
  std::size_t i = 0;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  BigInt exponent;
  BsElement witness;  // a^N
  /// t^-s a^N t^s = a^{image} for s = s1, s2.
  BigInt image1;
  BigInt image2;
};

CommonPowerWitness common_power_witness(const Sigma& sigma, std::size_t i, std::int64_t s1, std::int64_t s2,
                                        std::int64_t bound);

/// The translation tau as a map of the ball: cell g to cell tau(g), a type-i
/// vertex to a type-(i+tau) vertex.
struct FSigmaAction {
  std::size_t tau = 0;
  std::vector<std::optional<std::uint32_t>> cell_map;
  std::vector<std::optional<std::uint32_t>> vertex_map;
  std::vector<std::optional<std::uint32_t>> edge_map;
  Report report;
};

/// Throws ValidationError for tau outside F_sigma unless `force` is set, in
/// which case chart positions are re-read in the shifted vertex group.
FSigmaAction act_f_sigma(const DevelopedBall& ball, std::size_t tau, bool force = false);

}  // namespace hgrig
