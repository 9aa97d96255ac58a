#include "clustexp/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace clustexp {

std::optional<int> QuiverWithPotential::arrow_in(int triangle, int source_slot) const {
  for (int i = 0; i < static_cast<int>(arrows.size()); ++i) {
    const Arrow& a = arrows[static_cast<std::size_t>(i)];
    if (a.triangle == triangle && a.source_slot == source_slot) return i;
  }
  return std::nullopt;
}

QuiverWithPotential build_qp(const Triangulation& t) {
  QuiverWithPotential q;
  q.vertex_count = t.internal_count();
  for (int ti = 0; ti < static_cast<int>(t.triangles().size()); ++ti) {
    const Triangle& tri = t.triangle(ti);
    std::array<int, 3> own{-1, -1, -1};
    int count = 0;
    for (int s = 0; s < 3; ++s) {
      const Arc& from = t.arc(tri.slots[static_cast<std::size_t>(s)].arc);
      const Arc& to = t.arc(tri.slots[static_cast<std::size_t>(next_slot(s))].arc);
      if (!from.internal() || !to.internal()) continue;
      // The anticlockwise successor shares the corner at which `from` is the
      // clockwise predecessor.
      own[static_cast<std::size_t>(s)] = static_cast<int>(q.arrows.size());
      q.arrows.push_back({from.index, to.index, ti, s});
      ++count;
    }
    if (count == 3) q.potential_cycles.push_back(own);
  }
  return q;
}

IntMatrix signed_adjacency(const QuiverWithPotential& q) {
  const auto n = static_cast<std::size_t>(q.vertex_count);
  IntMatrix b(n, std::vector<int>(n, 0));
  for (const Arrow& a : q.arrows) {
    const auto i = static_cast<std::size_t>(a.source - 1);
    const auto j = static_cast<std::size_t>(a.target - 1);
    b[j][i] += 1;
    b[i][j] -= 1;
  }
  return b;
}

std::set<std::pair<int, int>> gentle_relations(const QuiverWithPotential& q) {
  std::set<std::pair<int, int>> out;
  for (const auto& cyc : q.potential_cycles)
    for (int s = 0; s < 3; ++s) out.emplace(cyc[static_cast<std::size_t>(s)], cyc[static_cast<std::size_t>(next_slot(s))]);
  return out;
}

std::string render_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

std::string render_qp(const Triangulation& t, const QuiverWithPotential& q) {
  auto name = [&](int v) { return t.arc(t.internal_arc(v)).label; };
  std::vector<int> order(q.arrows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const Arrow& a = q.arrows[static_cast<std::size_t>(x)];
    const Arrow& b = q.arrows[static_cast<std::size_t>(y)];
    return std::tie(a.source, a.target, a.triangle) < std::tie(b.source, b.target, b.triangle);
  });
  std::ostringstream os;
  os << "vertices " << q.vertex_count << '\n';
  for (int i : order) {
    const Arrow& a = q.arrows[static_cast<std::size_t>(i)];
    os << "arrow " << name(a.source) << " -> " << name(a.target) << " triangle " << a.triangle + 1 << '\n';
  }
  for (const auto& cyc : q.potential_cycles) {
    const Arrow& a = q.arrows[static_cast<std::size_t>(cyc[0])];
    const Arrow& b = q.arrows[static_cast<std::size_t>(cyc[1])];
    const Arrow& c = q.arrows[static_cast<std::size_t>(cyc[2])];
    os << "potential " << name(a.source) << " -> " << name(b.source) << " -> " << name(c.source) << " -> "
       << name(a.source) << " triangle " << a.triangle + 1 << '\n';
  }
  return os.str();
}

}  // namespace clustexp
