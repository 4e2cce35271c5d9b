#include "hgrig/intersection_graph.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "hgrig/error.hpp"
#include "detail/parallel.hpp"

namespace hgrig {

bool ThetaBall::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto& list = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const std::uint32_t other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::binary_search(list.begin(), list.end(), other);
}

void ThetaBall::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u == v) return;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

void ThetaBall::remove_edge(std::uint32_t u, std::uint32_t v) {
  auto drop = [](std::vector<std::uint32_t>& list, std::uint32_t x) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (it != list.end() && *it == x) list.erase(it);
  };
  drop(adjacency_[u], v);
  drop(adjacency_[v], u);
}

void ThetaBall::finalize() {
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

std::size_t ThetaBall::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ThetaBall::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < adjacency_.size(); ++u) {
    for (std::uint32_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

ThetaBall theta(const DevelopedBall& ball) {
  ThetaBall out(ball.vertices().size());
  for (const HigEdge& e : ball.edges()) out.add_edge(e.source, e.target);
  std::vector<std::uint32_t> targets;
  for (std::uint32_t x = 0; x < ball.vertices().size(); ++x) {
    out.set_interior(x, ball.vertices()[x].interior);
    targets.clear();
    for (std::uint32_t e : ball.incident_edges(x)) {
      if (ball.edges()[e].source == x) targets.push_back(ball.edges()[e].target);
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
      for (std::size_t j = i + 1; j < targets.size(); ++j) out.add_edge(targets[i], targets[j]);
    }
  }
  out.finalize();
  return out;
}

std::vector<std::uint32_t> deep_region(const DevelopedBall& ball, int margin) {
  const std::vector<bool> deep = deep_vertices(ball, margin);
  std::vector<std::uint32_t> region;
  for (std::uint32_t v = 0; v < deep.size(); ++v) {
    if (deep[v]) region.push_back(v);
  }
  return region;
}

Cycle canonical_cycle(const Cycle& cycle) {
  Cycle best;
  const std::size_t n = cycle.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (int dir : {1, -1}) {
      Cycle c;
      for (std::size_t i = 0; i < n; ++i) c.push_back(cycle[dir == 1 ? (start + i) % n : (start + n - i) % n]);
      if (best.empty() || c < best) best = std::move(c);
    }
  }
  return best;
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const ThetaBall& theta, std::size_t k, const std::vector<bool>& in_region)
      : theta_(theta), k_(k), in_region_(in_region) {}

  // Cycles whose least vertex is `start`, in lexicographic order.
  std::vector<Cycle> from(std::uint32_t start, std::atomic<std::size_t>& total, std::size_t cap) {
    found_.clear();
    path_.assign(1, start);
    extend(total, cap);
    return std::move(found_);
  }

 private:
  void extend(std::atomic<std::size_t>& total, std::size_t cap) {
    const std::size_t i = path_.size();
    const std::uint32_t start = path_[0];
    for (std::uint32_t w : theta_.neighbors(path_.back())) {
      if (w <= start || !in_region_[w]) continue;
      if (std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
      if (i == k_ - 1 && w < path_[1]) continue;  // one orientation only
      // only the closing vertex may touch the start again
      bool ok = i == 1 || theta_.adjacent(w, start) == (i == k_ - 1);
      for (std::size_t j = 1; ok && j + 1 < i; ++j) ok = !theta_.adjacent(w, path_[j]);
      if (!ok) continue;
      path_.push_back(w);
      if (path_.size() == k_) {
        found_.push_back(path_);
        if (++total > cap) throw ResourceCapError("cycle cap " + std::to_string(cap) + " exceeded");
      } else {
        extend(total, cap);
      }
      path_.pop_back();
    }
  }

  const ThetaBall& theta_;
  std::size_t k_;
  const std::vector<bool>& in_region_;
  Cycle path_;
  std::vector<Cycle> found_;
};

}  // namespace

std::vector<Cycle> induced_cycles(const ThetaBall& theta, std::size_t k, const std::vector<std::uint32_t>& region,
                                  std::size_t cycle_cap, unsigned threads) {
  if (k < 3) throw ValidationError("cycles need k >= 3");
  std::vector<bool> in_region(theta.size(), false);
  for (std::uint32_t v : region) {
    if (v >= theta.size()) throw ValidationError("region vertex out of range");
    if (!theta.interior(v)) throw ValidationError("region vertex " + std::to_string(v) + " is not interior");
    in_region[v] = true;
  }
  std::vector<std::uint32_t> starts(region);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  std::vector<std::vector<Cycle>> parts(starts.size());
  std::atomic<std::size_t> total{0};
  std::atomic<bool> capped{false};
  detail::parallel_for(
      starts.size(), threads,
      [&](std::size_t i) {
        if (capped) return;
        try {
          parts[i] = CycleSearch(theta, k, in_region).from(starts[i], total, cycle_cap);
        } catch (const ResourceCapError&) {
          capped = true;
        }
      },
      2);
  if (capped) {
    throw ResourceCapError("cycle cap " + std::to_string(cycle_cap) + " exceeded while enumerating induced " +
                           std::to_string(k) + "-cycles");
  }
  std::vector<Cycle> out;
  for (auto& part : parts) {
    for (Cycle& c : part) out.push_back(std::move(c));
  }
  return out;
}

Report verify_correspondence(const DevelopedBall& ball, const ThetaBall& theta, const std::vector<std::uint32_t>& region,
                             unsigned threads) {
  Report report;
  report.check = "cycle_correspondence";
  const std::size_t k = ball.k();
  std::vector<bool> in_region(ball.vertices().size(), false);
  for (std::uint32_t v : region) in_region[v] = true;
  const std::vector<Cycle> cycles = induced_cycles(theta, k, region, default_caps().cycles, threads);

  // cell -> cycle
  std::map<Cycle, std::vector<std::uint32_t>> cell_of;
  std::size_t region_cells = 0;
  for (std::uint32_t c = 0; c < ball.cells().size(); ++c) {
    const Cycle& vs = ball.cells()[c].vertices;
    if (!std::all_of(vs.begin(), vs.end(), [&](std::uint32_t v) { return in_region[v]; })) continue;
    ++region_cells;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
        if (theta.adjacent(vs[i], vs[j]) != consecutive) {
          report.violate({consecutive ? "cell-side-not-theta-edge" : "cell-chord-in-theta",
                          {{"cell", c}, {"vertices", vs}, {"pair", {vs[i], vs[j]}}}});
        }
      }
    }
    cell_of[canonical_cycle(vs)].push_back(c);
  }
  for (const auto& [cycle, cells] : cell_of) {
    if (cells.size() > 1) report.violate({"cells-share-vertex-cycle", {{"cycle", cycle}, {"cells", cells}}});
  }

  // cycle -> cell
  std::size_t matched = 0;
  for (const Cycle& cycle : cycles) {
    auto it = cell_of.find(cycle);
    if (it == cell_of.end()) {
      nlohmann::json types = nlohmann::json::array();
      for (std::uint32_t v : cycle) types.push_back(ball.vertices()[v].type);
      nlohmann::json classes = nlohmann::json::array();
      for (std::size_t i = 0; i < k; ++i) {
        classes.push_back(to_string(stabilizer_intersection_class(ball, cycle[i], cycle[(i + 1) % k], 0)));
      }
      report.violate({"cycle-without-cell", {{"cycle", cycle}, {"types", types}, {"sides", classes}}});
    } else {
      ++matched;
    }
  }
  std::size_t cells_matched = 0;
  for (const auto& [cycle, cells] : cell_of) {
    if (std::binary_search(cycles.begin(), cycles.end(), cycle)) cells_matched += cells.size();
  }
  report.stats["region_vertices"] = region.size();
  report.stats["induced_cycles"] = cycles.size();
  report.stats["cells_in_region"] = region_cells;
  report.stats["cycles_matched"] = matched;
  report.stats["cells_matched"] = cells_matched;
  report.stats["theta_edges"] = theta.edge_count();
  if (region_cells == 0) report.inconclusive("no cell lies inside the region");
  return report;
}

Report theta_equivariance(const DevelopedBall& ball, const ThetaBall& theta, std::size_t tau, bool force) {
  FSigmaAction action = act_f_sigma(ball, tau, force);
  Report report;
  report.check = "theta_equivariance";
  merge_into(report, action.report);
  report.stats = action.report.stats;
  std::vector<std::uint32_t> interior;
  for (std::uint32_t v = 0; v < ball.vertices().size(); ++v) {
    if (theta.interior(v) && action.vertex_map[v]) interior.push_back(v);
  }
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const std::uint32_t u = interior[i];
    for (std::size_t j = i + 1; j < interior.size(); ++j) {
      const std::uint32_t v = interior[j];
      ++pairs;
      const bool before = theta.adjacent(u, v);
      const bool after = theta.adjacent(*action.vertex_map[u], *action.vertex_map[v]);
      if (before != after) {
        ++mismatches;
        report.violate({before ? "edge-to-non-edge" : "non-edge-to-edge",
                        {{"pair", {u, v}}, {"image", {*action.vertex_map[u], *action.vertex_map[v]}}}});
      }
    }
  }
  report.stats["interior_pairs"] = pairs;
  report.stats["mismatches"] = mismatches;
  return report;
}

}  // namespace hgrig
