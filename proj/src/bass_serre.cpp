#include <algorithm>

#include "hgrig/cayley_lines.hpp"
#include "hgrig/error.hpp"

namespace hgrig {

std::string to_string(TreeOrder order) {
  switch (order) {
    case TreeOrder::equal: return "equal";
    case TreeOrder::less: return "less";
    case TreeOrder::greater: return "greater";
    case TreeOrder::incomparable: return "incomparable";
  }
  return "?";
}

TreeVertex tree_vertex_of(const BsElement& g) {
  TreeVertex v;
  v.address.reserve(g.syllable_count());
  for (const Syllable& s : g.syllables()) v.address.emplace_back(to_int64(s.exponent), s.sign);
  return v;
}

TreeVertex bass_serre_address(const StandardLine& line) {
  if (line.label != Label::a) throw ValidationError("Bass-Serre addresses are defined for a-lines only");
  return tree_vertex_of(line.rep);
}

namespace {

std::size_t common_prefix(const TreeVertex& v1, const TreeVertex& v2) {
  const std::size_t limit = std::min(v1.address.size(), v2.address.size());
  std::size_t c = 0;
  while (c < limit && v1.address[c] == v2.address[c]) ++c;
  return c;
}

bool all_signs(const TreeVertex& v, std::size_t from, int sign) {
  return std::all_of(v.address.begin() + static_cast<std::ptrdiff_t>(from), v.address.end(),
                     [sign](const auto& step) { return step.second == sign; });
}

}  // namespace

std::size_t tree_distance(const TreeVertex& v1, const TreeVertex& v2) {
  const std::size_t c = common_prefix(v1, v2);
  return v1.address.size() + v2.address.size() - 2 * c;
}

TreeOrder tree_order(const TreeVertex& v1, const TreeVertex& v2) {
  // The geodesic climbs from v1 to the common prefix, then descends to v2.
  // A (r,+1) step is oriented away from its parent, a (r,-1) step towards it.
  const std::size_t c = common_prefix(v1, v2);
  if (c == v1.address.size() && c == v2.address.size()) return TreeOrder::equal;
  if (all_signs(v1, c, -1) && all_signs(v2, c, 1)) return TreeOrder::less;
  if (all_signs(v1, c, 1) && all_signs(v2, c, -1)) return TreeOrder::greater;
  return TreeOrder::incomparable;
}

std::vector<StandardLine> tree_out_neighbors(const StandardLine& line) {
  if (line.label != Label::a) throw ValidationError("tree neighbours are defined for a-lines only");
  std::vector<StandardLine> out;
  for (std::int64_t r = 0; r < line.rep.params().abs_n(); ++r) {
    BsElement x = line.rep;
    x.append_a(r);
    x.append_t(1);
    out.push_back(line_of(x, Label::a));
  }
  return out;
}

std::vector<StandardLine> tree_in_neighbors(const StandardLine& line) {
  if (line.label != Label::a) throw ValidationError("tree neighbours are defined for a-lines only");
  std::vector<StandardLine> out;
  for (std::int64_t r = 0; r < line.rep.params().abs_m(); ++r) {
    BsElement x = line.rep;
    x.append_a(r);
    x.append_t(-1);
    out.push_back(line_of(x, Label::a));
  }
  return out;
}

BsElement element_of_address(const BsParams& params, const TreeVertex& vertex) {
  std::vector<Syllable> syllables;
  for (const auto& [r, sign] : vertex.address) syllables.push_back({BigInt(r), sign});
  return BsElement::from_normal_form(params, std::move(syllables), 0);
}

}  // namespace hgrig
