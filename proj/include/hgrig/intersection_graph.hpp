#pragma once

// The intersection graph Theta on a developed ball: two vertices are joined
// when their stabilizers meet nontrivially, i.e. when they are adjacent in
// the 1-skeleton or are out-neighbours of a common vertex.

#include <cstdint>
#include <vector>

#include "hgrig/higman.hpp"
#include "hgrig/report.hpp"

namespace hgrig {

class ThetaBall {
 public:
  ThetaBall() = default;
  explicit ThetaBall(std::size_t nodes) : adjacency_(nodes), interior_(nodes, false) {}

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  /// Sorted neighbour lists; adjacency is a binary search.
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adjacency_[v]; }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  bool interior(std::uint32_t v) const { return interior_[v]; }
  void set_interior(std::uint32_t v, bool flag) { interior_[v] = flag; }
  /// Unordered edges (u < v), sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  void add_edge(std::uint32_t u, std::uint32_t v);
  void remove_edge(std::uint32_t u, std::uint32_t v);
  /// Sorts neighbour lists; call after a batch of add_edge.
  void finalize();

  friend bool operator==(const ThetaBall& x, const ThetaBall& y) {
    return x.adjacency_ == y.adjacency_ && x.interior_ == y.interior_;
  }

 private:
  std::vector<std::vector<std::uint32_t>> adjacency_;
  std::vector<bool> interior_;
};

ThetaBall theta(const DevelopedBall& ball);

using Cycle = std::vector<std::uint32_t>;

/// Vertices of the cells of level <= r - margin.
std::vector<std::uint32_t> deep_region(const DevelopedBall& ball, int margin);

/// Lexicographically least rotation/reflection.
Cycle canonical_cycle(const Cycle& cycle);

/// Induced k-cycles of Theta restricted to `region`, canonical and sorted.
/// Throws ResourceCapError past `cycle_cap` cycles.
std::vector<Cycle> induced_cycles(const ThetaBall& theta, std::size_t k, const std::vector<std::uint32_t>& region,
                                  std::size_t cycle_cap = default_caps().cycles, unsigned threads = 1);

/// Induced k-cycles in the region against cells with all vertices in it,
/// counted both ways.
Report verify_correspondence(const DevelopedBall& ball, const ThetaBall& theta, const std::vector<std::uint32_t>& region,
                             unsigned threads = 1);

/// The F_sigma relabeling maps Theta-edges and non-edges among interior
/// vertices to Theta-edges and non-edges.
Report theta_equivariance(const DevelopedBall& ball, const ThetaBall& theta, std::size_t tau, bool force = false);

}  // namespace hgrig
