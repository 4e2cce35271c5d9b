#include "doctest.h"

#include <algorithm>
#include <deque>
#include <set>

#include "hgrig/error.hpp"
#include "hgrig/intersection_graph.hpp"

using namespace hgrig;

namespace {

const char* kClassical = "1,2;1,2;1,2;1,2;1,2";

const DevelopedBall& classical_ball() {
  static const DevelopedBall b = build_ball(parse_sigma(kClassical), 2, 2);
  return b;
}

// Every k-subset, every cyclic order, checked for an induced cycle.
std::set<Cycle> naive_induced_cycles(const ThetaBall& t, std::size_t k, const std::vector<std::uint32_t>& region) {
  std::set<Cycle> out;
  std::vector<bool> choose(region.size(), false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(k), true);
  do {
    Cycle subset;
    for (std::size_t i = 0; i < region.size(); ++i) {
      if (choose[i]) subset.push_back(region[i]);
    }
    std::sort(subset.begin(), subset.end());
    Cycle order = subset;
    do {
      bool ok = true;
      for (std::size_t i = 0; ok && i < k; ++i) {
        for (std::size_t j = i + 1; ok && j < k; ++j) {
          const bool side = j == i + 1 || (i == 0 && j == k - 1);
          ok = t.adjacent(order[i], order[j]) == side;
        }
      }
      if (ok) out.insert(canonical_cycle(order));
    } while (std::next_permutation(order.begin() + 1, order.end()));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

// The first `count` region vertices in breadth-first order from the base cell.
std::vector<std::uint32_t> near_base(const DevelopedBall& b, const ThetaBall& t, std::size_t count) {
  std::vector<std::uint32_t> region = deep_region(b, 1);
  std::vector<bool> allowed(b.vertices().size(), false);
  for (std::uint32_t v : region) allowed[v] = true;
  std::vector<bool> seen(b.vertices().size(), false);
  std::vector<std::uint32_t> out;
  std::deque<std::uint32_t> queue(b.cells()[0].vertices.begin(), b.cells()[0].vertices.end());
  for (std::uint32_t v : queue) seen[v] = true;
  while (!queue.empty() && out.size() < count) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    if (!allowed[v]) continue;
    out.push_back(v);
    for (std::uint32_t w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("canonical cycles") {
  CHECK(canonical_cycle({3, 1, 2}) == Cycle{1, 2, 3});
  CHECK(canonical_cycle({4, 2, 9, 1, 7}) == Cycle{1, 7, 4, 2, 9});
  CHECK(canonical_cycle({1, 9, 2, 4, 7}) == Cycle{1, 7, 4, 2, 9});
}

TEST_CASE("theta edges") {
  const DevelopedBall& b = classical_ball();
  ThetaBall t = theta(b);
  for (const HigEdge& e : b.edges()) CHECK(t.adjacent(e.source, e.target));
  const auto& base = b.cells()[0].vertices;
  CHECK_FALSE(t.adjacent(base[0], base[2]));
  CHECK(t.edge_count() == t.edges().size());
  t.remove_edge(base[0], base[1]);
  CHECK_FALSE(t.adjacent(base[0], base[1]));
  CHECK_FALSE(t.adjacent(base[1], base[0]));
}

TEST_CASE("induced cycles") {
  const DevelopedBall& b = classical_ball();
  ThetaBall t = theta(b);
  const std::vector<std::uint32_t> region = deep_region(b, 1);
  std::vector<Cycle> five = induced_cycles(t, 5, region);
  CHECK(std::binary_search(five.begin(), five.end(), canonical_cycle(b.cells()[0].vertices)));
  CHECK(std::is_sorted(five.begin(), five.end()));
  CHECK_FALSE(induced_cycles(t, 3, region).empty());
  CHECK(induced_cycles(t, 5, {b.cells()[0].vertices[0]}).empty());
  CHECK(induced_cycles(t, 5, region, default_caps().cycles, 4) == five);
  CHECK_THROWS_AS(induced_cycles(t, 5, region, 3), ResourceCapError);
  CHECK_THROWS_AS(induced_cycles(t, 2, region), ValidationError);

  std::vector<std::uint32_t> with_boundary = region;
  for (std::uint32_t v = 0; v < b.vertices().size(); ++v) {
    if (!b.vertices()[v].interior) {
      with_boundary.push_back(v);
      break;
    }
  }
  CHECK_THROWS_AS(induced_cycles(t, 5, with_boundary), ValidationError);
}

TEST_CASE("induced cycles agree with exhaustive search") {
  for (const char* text : {kClassical, "2,3;1,2;2,-3;1,3;1,2"}) {
    DevelopedBall b = build_ball(parse_sigma(text), 2, 2);
    ThetaBall t = theta(b);
    for (std::size_t count : {8u, 14u}) {
      std::vector<std::uint32_t> region = near_base(b, t, count);
      for (std::size_t k : {3u, 4u, 5u}) {
        std::vector<Cycle> fast = induced_cycles(t, k, region);
        std::set<Cycle> slow = naive_induced_cycles(t, k, region);
        CHECK(std::set<Cycle>(fast.begin(), fast.end()) == slow);
        CHECK(fast.size() == slow.size());
      }
    }
  }
}

TEST_CASE("cycles and cells correspond in the deep region") {
  const DevelopedBall& b = classical_ball();
  ThetaBall t = theta(b);
  const std::vector<std::uint32_t> region = deep_region(b, 1);
  Report r = verify_correspondence(b, t, region);
  CHECK(r.passed());
  CHECK(r.stats["induced_cycles"] == r.stats["cells_in_region"]);
  CHECK(r.stats["cycles_matched"] == r.stats["induced_cycles"]);

  // a missing side is reported with the cell as witness
  const auto& base = b.cells()[0].vertices;
  ThetaBall broken = t;
  broken.remove_edge(base[0], base[1]);
  Report bad = verify_correspondence(b, broken, region);
  CHECK(bad.status == Status::violation);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses[0].kind == "cell-side-not-theta-edge");
  CHECK(bad.witnesses[0].detail["cell"] == 0);

  // an extra chord breaks the cycle as well
  ThetaBall chord = t;
  chord.add_edge(base[0], base[2]);
  chord.finalize();
  Report chorded = verify_correspondence(b, chord, region);
  CHECK(chorded.status == Status::violation);

  Report empty = verify_correspondence(b, t, {});
  CHECK(empty.status == Status::inconclusive);
}

TEST_CASE("theta equivariance") {
  const DevelopedBall& b = classical_ball();
  ThetaBall t = theta(b);
  Report r = theta_equivariance(b, t, 2);
  CHECK(r.passed());
  CHECK(r.stats["interior_pairs"].get<std::size_t>() > 0);

  // relabel one Theta-edge away: equivariance must fail
  const auto& base = b.cells()[0].vertices;
  ThetaBall broken = t;
  broken.remove_edge(base[0], base[1]);
  CHECK(theta_equivariance(b, broken, 2).status == Status::violation);

  DevelopedBall odd = build_ball(parse_sigma("1,2;1,3;1,2;1,3"), 1, 2);
  ThetaBall todd = theta(odd);
  CHECK_THROWS_AS(theta_equivariance(odd, todd, 1), ValidationError);
  CHECK(theta_equivariance(odd, todd, 2).passed());
  CHECK(theta_equivariance(odd, todd, 1, true).status == Status::violation);
}
