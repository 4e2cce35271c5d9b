#include <algorithm>
#include <array>

#include "hgrig/cayley_lines.hpp"
#include "hgrig/error.hpp"
#include "detail/parallel.hpp"

namespace hgrig {

namespace {

std::array<BsElement, 4> successors(const BsElement& x) {
  std::array<BsElement, 4> out{x, x, x, x};
  out[0].append_a(1);
  out[1].append_a(-1);
  out[2].append_t(1);
  out[3].append_t(-1);
  return out;
}

}  // namespace

std::optional<std::uint32_t> CayleyBall::find(const BsElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t CayleyBall::add_vertex(BsElement x, int depth) {
  const auto id = static_cast<std::uint32_t>(vertices_.size());
  auto [it, inserted] = index_.emplace(x, id);
  if (!inserted) throw ValidationError("duplicate ball vertex " + to_string(x));
  vertices_.push_back(std::move(x));
  depth_.push_back(depth);
  return id;
}

void CayleyBall::rebuild_edges() {
  edges_.clear();
  for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
    BsElement xa = vertices_[v];
    xa.append_a(1);
    if (auto w = find(xa)) edges_.push_back({v, *w, Label::a});
    BsElement xt = vertices_[v];
    xt.append_t(1);
    if (auto w = find(xt)) edges_.push_back({v, *w, Label::t});
  }
}

CayleyBall ball(const BsParams& params, int radius, const BallOptions& options) {
  if (radius < 0) throw ValidationError("ball radius must be non-negative");
  CayleyBall result(params, radius);
  result.add_vertex(BsElement(params), 0);
  std::vector<std::uint32_t> frontier{0};
  for (int level = 1; level <= radius && !frontier.empty(); ++level) {
    std::vector<std::array<BsElement, 4>> next(frontier.size(), {BsElement(params), BsElement(params),
                                                                  BsElement(params), BsElement(params)});
    detail::parallel_for(frontier.size(), options.threads,
                 [&](std::size_t i) { next[i] = successors(result.vertices()[frontier[i]]); });
    std::vector<std::uint32_t> grown;
    for (auto& group : next) {
      for (BsElement& y : group) {
        if (result.contains(y)) continue;
        if (result.size() >= options.vertex_cap) {
          throw ResourceCapError("Cayley ball of radius " + std::to_string(radius) + " in " + to_string(params) +
                                 " exceeds the vertex cap of " + std::to_string(options.vertex_cap));
        }
        grown.push_back(result.add_vertex(std::move(y), level));
      }
    }
    frontier = std::move(grown);
  }
  result.rebuild_edges();
  return result;
}

}  // namespace hgrig
