#include "hgrig/higman.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "hgrig/cayley_lines.hpp"
#include "hgrig/error.hpp"

namespace hgrig {

// ---------------------------------------------------------------------------
// Sigma

Sigma make_sigma(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  if (pairs.size() < 4) {
    throw ValidationError("a Higman presentation needs k >= 4 generators, got " + std::to_string(pairs.size()));
  }
  Sigma sigma;
  for (const auto& [m, n] : pairs) sigma.pairs.push_back(make_params(m, n));
  return sigma;
}

namespace {

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("bad integer '" + std::string(text) + "' in sigma");
  }
  return value;
}

}  // namespace

Sigma parse_sigma(std::string_view text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    const std::size_t comma = item.find(',');
    if (comma == std::string_view::npos) throw ValidationError("sigma entries look like 'm,n', got '" + std::string(item) + "'");
    pairs.emplace_back(parse_int(item.substr(0, comma)), parse_int(item.substr(comma + 1)));
    start = end + 1;
  }
  return make_sigma(pairs);
}

std::string to_string(const Sigma& sigma) {
  std::string out;
  for (const BsParams& p : sigma.pairs) {
    if (!out.empty()) out += ';';
    out += std::to_string(p.m) + ',' + std::to_string(p.n);
  }
  return out;
}

const BsParams& vertex_group(const Sigma& sigma, std::size_t type) {
  return sigma.pairs[(type + sigma.k() - 1) % sigma.k()];
}

bool FSigma::contains(std::size_t tau) const {
  return std::binary_search(translations.begin(), translations.end(), tau % k);
}

FSigma f_sigma(const Sigma& sigma) {
  FSigma f{sigma.k(), {}};
  for (std::size_t tau = 0; tau < sigma.k(); ++tau) {
    bool ok = true;
    // canonical pairs absorb the sign flip (m,n) -> (-m,-n)
    for (std::size_t i = 0; i < sigma.k() && ok; ++i) ok = sigma.pairs[(i + tau) % sigma.k()] == sigma.pairs[i];
    if (ok) f.translations.push_back(tau);
  }
  return f;
}

// ---------------------------------------------------------------------------
// DevelopedBall

namespace {

std::uint64_t pair_key(std::uint32_t x, std::uint32_t y) {
  if (x > y) std::swap(x, y);
  return (static_cast<std::uint64_t>(x) << 32) | y;
}

}  // namespace

std::uint32_t DevelopedBall::add_vertex(HigVertex vertex) {
  vertices_.push_back(vertex);
  charts_.emplace_back();
  return static_cast<std::uint32_t>(vertices_.size() - 1);
}

std::uint32_t DevelopedBall::add_edge(HigEdge edge) {
  edges_.push_back(edge);
  return static_cast<std::uint32_t>(edges_.size() - 1);
}

std::uint32_t DevelopedBall::add_cell(HigCell cell) {
  cells_.push_back(std::move(cell));
  return static_cast<std::uint32_t>(cells_.size() - 1);
}

void DevelopedBall::add_chart_entry(std::uint32_t vertex, ChartEntry entry) {
  charts_.at(vertex).push_back(std::move(entry));
}

void DevelopedBall::finalize() {
  at_.assign(vertices_.size(), {});
  slot_of_.assign(vertices_.size(), {});
  incident_.assign(vertices_.size(), {});
  edge_index_.clear();
  for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
    auto& chart = charts_[v];
    std::sort(chart.begin(), chart.end(), [](const ChartEntry& x, const ChartEntry& y) { return x.cell < y.cell; });
    at_[v].reserve(chart.size());
    for (std::uint32_t i = 0; i < chart.size(); ++i) {
      if (!at_[v].emplace(chart[i].position, chart[i].cell).second) {
        throw ValidationError("two cells share a chart position at vertex " + std::to_string(v));
      }
      slot_of_[v].emplace(chart[i].cell, i);
    }
  }
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    const HigEdge& edge = edges_[e];
    if (edge.source >= vertices_.size() || edge.target >= vertices_.size()) throw ValidationError("edge endpoint out of range");
    incident_[edge.source].push_back(e);
    incident_[edge.target].push_back(e);
    edge_index_.emplace(pair_key(edge.source, edge.target), e);
  }
}

std::optional<std::uint32_t> DevelopedBall::cell_at(std::uint32_t vertex, const BsElement& position) const {
  auto it = at_[vertex].find(position);
  if (it == at_[vertex].end()) return std::nullopt;
  return it->second;
}

const BsElement& DevelopedBall::position(std::uint32_t vertex, std::uint32_t cell) const {
  auto it = slot_of_[vertex].find(cell);
  if (it == slot_of_[vertex].end()) {
    throw InternalError("cell " + std::to_string(cell) + " is not in the chart of vertex " + std::to_string(vertex));
  }
  return charts_[vertex][it->second].position;
}

std::optional<std::uint32_t> DevelopedBall::edge_between(std::uint32_t v1, std::uint32_t v2) const {
  auto it = edge_index_.find(pair_key(v1, v2));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Builder

namespace {

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class Builder {
 public:
  Builder(const Sigma& sigma, int r, int s, const BuildOptions& options)
      : sigma_(sigma), k_(sigma.k()), r_(r), s_(s), options_(options) {
    for (std::size_t i = 0; i < k_; ++i) {
      groups_.push_back(vertex_group(sigma, i));
      steps_.push_back(ball(groups_.back(), s, {options.vertex_cap, options.threads}).vertices());
    }
  }

  DevelopedBall run() {
    new_cell(0);
    for (int level = 0; level < r_; ++level) {
      for (;;) {
        std::vector<std::uint32_t> todo;
        for (std::uint32_t c = 0; c < cells_.size(); ++c) {
          if (cell_parent_[c] == c && cells_[c].level <= level && !cells_[c].expanded) todo.push_back(c);
        }
        if (todo.empty()) break;
        for (std::uint32_t c : todo) {
          c = find_cell(c);
          if (cells_[c].expanded) continue;
          cells_[c].expanded = true;
          for (std::uint32_t j = 0; j < k_; ++j) expand(c, j);
        }
      }
    }
    // boundary cells get fresh vertices where no chart reached them
    for (std::uint32_t c = 0; c < cells_.size(); ++c) {
      if (cell_parent_[c] != c) continue;
      for (std::uint32_t j = 0; j < k_; ++j) {
        if (cells_[c].slot[j] == kNone) {
          attach(c, new_vertex(j), BsElement(groups_[j]));
          drain();
        }
      }
    }
    return finish();
  }

 private:
  struct Cell {
    std::vector<std::uint32_t> slot;
    int level = 0;
    bool expanded = false;
  };
  struct TLineEntry {
    std::uint32_t cell;
    std::int64_t offset;
  };
  struct Vertex {
    std::uint32_t type = 0;
    std::unordered_map<std::uint32_t, BsElement> pos;  // keyed by cell representative
    std::unordered_map<BsElement, std::uint32_t, BsElementHash> at;
    std::unordered_map<BsElement, std::uint32_t, BsElementHash> aline;
    std::unordered_map<BsElement, TLineEntry, BsElementHash> tline;
  };
  // slot `slot` of d is the slot vertex of c, at position pos(c) * u
  struct VertexEq {
    std::uint32_t c, d, slot;
    BsElement u;
  };
  struct CellEq {
    std::uint32_t c, d;
  };

  std::uint32_t find_cell(std::uint32_t c) {
    while (cell_parent_[c] != c) c = cell_parent_[c] = cell_parent_[cell_parent_[c]];
    return c;
  }
  std::uint32_t find_vertex(std::uint32_t v) {
    while (vertex_parent_[v] != v) v = vertex_parent_[v] = vertex_parent_[vertex_parent_[v]];
    return v;
  }
  std::uint32_t slot_vertex(std::uint32_t c, std::uint32_t j) {
    const std::uint32_t v = cells_[c].slot[j];
    return v == kNone ? kNone : find_vertex(v);
  }

  std::uint32_t new_cell(int level) {
    if (cells_.size() >= options_.cell_cap) {
      throw ResourceCapError("cell cap " + std::to_string(options_.cell_cap) + " exceeded while developing " +
                             to_string(sigma_) + " at (r,s)=(" + std::to_string(r_) + "," + std::to_string(s_) + ")");
    }
    cells_.push_back({std::vector<std::uint32_t>(k_, kNone), level, false});
    cell_parent_.push_back(static_cast<std::uint32_t>(cell_parent_.size()));
    return static_cast<std::uint32_t>(cells_.size() - 1);
  }

  std::uint32_t new_vertex(std::uint32_t type) {
    if (vertices_.size() >= options_.vertex_cap) {
      throw ResourceCapError("vertex cap " + std::to_string(options_.vertex_cap) + " exceeded");
    }
    vertices_.emplace_back();
    vertices_.back().type = type;
    vertex_parent_.push_back(static_cast<std::uint32_t>(vertex_parent_.size()));
    return static_cast<std::uint32_t>(vertices_.size() - 1);
  }

  const BsElement& pos(std::uint32_t v, std::uint32_t c) {
    auto it = vertices_[v].pos.find(c);
    if (it == vertices_[v].pos.end()) throw InternalError("chart lookup of a cell outside the chart");
    return it->second;
  }

  // Puts representative cell e into the chart of vertex x at position p and
  // queues the identifications this forces.
  void attach(std::uint32_t e, std::uint32_t x, BsElement p) {
    Vertex& vx = vertices_[x];
    const std::uint32_t j = vx.type;
    if (auto it = vx.pos.find(e); it != vx.pos.end()) {
      if (it->second != p) throw InternalError("a cell sits at two chart positions of one vertex");
      return;
    }
    cells_[e].slot[j] = x;
    // same position: the same cell
    if (auto [it, inserted] = vx.at.emplace(p, e); !inserted && find_cell(it->second) != e) {
      cell_queue_.push_back({it->second, e});
    }
    // same a-line: the type-j edge, hence the type-(j+1) vertex, is shared
    if (auto [it, inserted] = vx.aline.emplace(p.without_tail(), e); !inserted) {
      const std::uint32_t f = find_cell(it->second);
      if (f != e) {
        const BigInt z = p.tail() - vx.pos.at(f).tail();
        const std::uint32_t next = (j + 1) % k_;
        vertex_queue_.push_back({f, e, next, power_of(groups_[next], Label::t, z)});
      }
    }
    // same t-line: the type-(j-1) edge and vertex are shared
    auto [rep, offset] = t_line_rep(p);
    if (auto [it, inserted] = vx.tline.emplace(std::move(rep), TLineEntry{e, offset}); !inserted) {
      const std::uint32_t f = find_cell(it->second.cell);
      if (f != e) {
        const std::uint32_t prev = (j + k_ - 1) % k_;
        vertex_queue_.push_back({f, e, prev, power_of(groups_[prev], Label::a, BigInt(offset - it->second.offset))});
      }
    }
    vx.pos.emplace(e, std::move(p));
  }

  // Moves the chart of y into x, with pos_x = g * pos_y.
  void merge_vertices(std::uint32_t x, std::uint32_t y, BsElement g) {
    if (vertices_[y].pos.size() > vertices_[x].pos.size()) {
      std::swap(x, y);
      g = invert(g);
    }
    vertex_parent_[y] = x;
    std::vector<std::pair<std::uint32_t, BsElement>> entries(vertices_[y].pos.begin(), vertices_[y].pos.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    vertices_[y] = Vertex{vertices_[y].type, {}, {}, {}, {}};
    for (auto& [cell, p] : entries) attach(find_cell(cell), x, multiply(g, p));
  }

  void apply(const VertexEq& eq) {
    const std::uint32_t c = find_cell(eq.c);
    const std::uint32_t d = find_cell(eq.d);
    std::uint32_t xc = slot_vertex(c, eq.slot);
    if (xc == kNone) {
      xc = new_vertex(eq.slot);
      attach(c, xc, BsElement(groups_[eq.slot]));
    }
    BsElement target = multiply(pos(xc, c), eq.u);
    const std::uint32_t xd = slot_vertex(d, eq.slot);
    if (xd == kNone) {
      attach(d, xc, std::move(target));
    } else if (xd == xc) {
      if (pos(xc, d) != target) throw InternalError("conflicting chart positions for one cell");
    } else {
      BsElement g = multiply(target, invert(pos(xd, d)));
      merge_vertices(xc, xd, std::move(g));
    }
  }

  void apply(const CellEq& eq) {
    std::uint32_t w = find_cell(eq.c);
    std::uint32_t l = find_cell(eq.d);
    if (w == l) return;
    if (l < w) std::swap(w, l);
    cell_parent_[l] = w;
    cells_[w].level = std::min(cells_[w].level, cells_[l].level);
    cells_[w].expanded = cells_[w].expanded || cells_[l].expanded;
    for (std::uint32_t j = 0; j < k_; ++j) {
      const std::uint32_t xl = slot_vertex(l, j);
      if (xl == kNone) continue;
      auto node = vertices_[xl].pos.extract(l);
      const std::uint32_t xw = slot_vertex(w, j);
      if (xw == kNone) {
        cells_[w].slot[j] = xl;
        node.key() = w;
        vertices_[xl].pos.insert(std::move(node));
      } else if (xw == xl) {
        if (pos(xw, w) != node.mapped()) throw InternalError("merged cells disagree on a chart position");
      } else {
        BsElement g = multiply(pos(xw, w), invert(node.mapped()));
        merge_vertices(xw, xl, std::move(g));
      }
    }
  }

  void drain() {
    while (!cell_queue_.empty() || !vertex_queue_.empty()) {
      if (!cell_queue_.empty()) {
        CellEq eq = cell_queue_.front();
        cell_queue_.pop_front();
        apply(eq);
      } else {
        VertexEq eq = std::move(vertex_queue_.front());
        vertex_queue_.pop_front();
        apply(eq);
      }
    }
  }

  void expand(std::uint32_t c, std::uint32_t j) {
    c = find_cell(c);
    if (slot_vertex(c, j) == kNone) {
      attach(c, new_vertex(j), BsElement(groups_[j]));
      drain();
    }
    const int level = cells_[c].level;
    for (const BsElement& h : steps_[j]) {
      c = find_cell(c);
      const std::uint32_t x = slot_vertex(c, j);
      BsElement target = multiply(pos(x, c), h);
      if (vertices_[x].at.count(target)) continue;
      attach(new_cell(level + 1), x, std::move(target));
      drain();
    }
  }

  DevelopedBall finish() {
    std::vector<std::uint32_t> cell_id(cells_.size(), kNone);
    std::vector<std::uint32_t> vertex_id(vertices_.size(), kNone);
    std::vector<HigVertex> vertices;
    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
      if (vertex_parent_[v] != v) continue;
      vertex_id[v] = static_cast<std::uint32_t>(vertices.size());
      vertices.push_back({vertices_[v].type, false});
    }
    std::vector<HigCell> cells;
    for (std::uint32_t c = 0; c < cells_.size(); ++c) {
      if (cell_parent_[c] != c) continue;
      cell_id[c] = static_cast<std::uint32_t>(cells.size());
      HigCell cell;
      cell.level = cells_[c].level;
      cell.interior = cells_[c].expanded;
      for (std::uint32_t j = 0; j < k_; ++j) cell.vertices.push_back(vertex_id[slot_vertex(c, j)]);
      cells.push_back(std::move(cell));
    }
    // type-j edges are the a-lines of type-j charts
    std::vector<std::unordered_map<BsElement, std::uint32_t, BsElementHash>> edge_of(vertices_.size());
    std::vector<HigEdge> edges;
    for (std::uint32_t c = 0; c < cells_.size(); ++c) {
      if (cell_parent_[c] != c) continue;
      HigCell& cell = cells[cell_id[c]];
      for (std::uint32_t j = 0; j < k_; ++j) {
        const std::uint32_t x = slot_vertex(c, j);
        auto [it, inserted] = edge_of[x].emplace(pos(x, c).without_tail(), static_cast<std::uint32_t>(edges.size()));
        if (inserted) edges.push_back({j, cell.vertices[j], cell.vertices[(j + 1) % k_]});
        cell.edges.push_back(it->second);
      }
      if (cell.interior) {
        for (std::uint32_t v : cell.vertices) vertices[v].interior = true;
      }
    }
    DevelopedBall result(sigma_, r_, s_);
    for (const HigVertex& v : vertices) result.add_vertex(v);
    for (const HigEdge& e : edges) result.add_edge(e);
    for (HigCell& cell : cells) result.add_cell(std::move(cell));
    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
      if (vertex_parent_[v] != v) continue;
      for (const auto& [cell, p] : vertices_[v].pos) result.add_chart_entry(vertex_id[v], {cell_id[find_cell(cell)], p});
    }
    result.finalize();
    return result;
  }

  const Sigma& sigma_;
  std::size_t k_;
  int r_;
  int s_;
  BuildOptions options_;
  std::vector<BsParams> groups_;
  std::vector<std::vector<BsElement>> steps_;
  std::vector<Cell> cells_;
  std::vector<std::uint32_t> cell_parent_;
  std::vector<Vertex> vertices_;
  std::vector<std::uint32_t> vertex_parent_;
  std::deque<CellEq> cell_queue_;
  std::deque<VertexEq> vertex_queue_;
};

}  // namespace

DevelopedBall build_ball(const Sigma& sigma, int r, int s, const BuildOptions& options) {
  if (r < 0) throw ValidationError("r must be >= 0");
  if (s < 1) throw ValidationError("s must be >= 1");
  return Builder(sigma, r, s, options).run();
}

}  // namespace hgrig
