#pragma once

// Brute-force checks of the rigidity lemmas for the line graph of BS(m,n).
//
// Every check reads only data that is fully visible in the finite ball: a
// point counts as "decided" when the whole t-segment needed to answer the
// question lies inside the ball. Checks returning a Report mark themselves
// INCONCLUSIVE when the ball is too small; checks returning a value throw
// TruncationError instead.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hgrig/cayley_lines.hpp"
#include "hgrig/report.hpp"

namespace hgrig {

struct GapReport {
  std::size_t d = 0;
  std::string direction;  // "lower" when u2 < u1, "upper" when u1 < u2
  BigInt measured_gap = 0;
  BigInt formula_gap = 0;
  std::size_t samples = 0;  // spacings measured
  bool equally_spaced = true;

  bool passed() const { return equally_spaced && measured_gap == formula_gap; }

  friend bool operator==(const GapReport&, const GapReport&) = default;
};

/// Whether some t-line meets both a-lines, decided exactly (not from the ball).
/// `low` < `high` at tree distance d.
bool has_common_t_line(const StandardLine& low, const StandardLine& high, std::size_t d);

/// Spacing of l_2^{12} along l_2. Throws ValidationError when the lines are
/// incomparable or share no t-line, TruncationError when nothing is measurable.
GapReport gaps(const LambdaGraph& graph, const StandardLine& u1, const StandardLine& u2);

/// Out/in degree of every fully visible tree vertex: |n| out, |m| in.
Report tree_degree_check(const LambdaGraph& graph);

/// a-lines met by a common visible t-line are comparable, ordered along it.
Report comparability_check(const LambdaGraph& graph);

/// Lambda_13 strictly inside Lambda_12; inside Lambda_23, strictly iff p > 1.
Report containment_check(const LambdaGraph& graph, const StandardLine& u1, const StandardLine& u2,
                         const StandardLine& u3);

struct AdjacencyOptions {
  /// Candidates u3 (and u4) range over a-lines met by one Lambda_12 t-line at
  /// signed offsets in [-search_radius, d + search_radius].
  int search_radius = 2;
  std::size_t scan_limit = 4096;
};

struct AdjacencyResult {
  bool predicate = false;
  std::vector<StandardLine> witness;  // u3 (and u4) when the predicate fails
  Report report;
};

/// The combinatorial adjacency predicate (no u3 when m does not divide n, no
/// pair u3,u4 when it does). Throws TruncationError when undecided.
AdjacencyResult adjacency_predicate(const LambdaGraph& graph, const StandardLine& u1, const StandardLine& u2,
                                    const AdjacencyOptions& options = {});

/// |V_1|, |V_2| for adjacent u1 > u2; V_i excludes the other endpoint.
std::pair<std::size_t, std::size_t> count_strongly_comparable(const LambdaGraph& graph, const StandardLine& u1,
                                                              const StandardLine& u2);

/// Covering set for a-lines; bounded refutation of any cover for t-lines.
Report type_detection_witness(const LambdaGraph& graph, const StandardLine& u, std::size_t search_bound);

/// g t^j g^-1 in <t> forces g in <t>; g a^j g^-1 never lies in <t>.
Report malnormal_check(const CayleyBall& ball, int exponent_bound);

}  // namespace hgrig
