#include "clustexp/surface.hpp"

#include "clustexp/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace clustexp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t corner_id(int triangle, int corner) { return static_cast<std::size_t>(3 * triangle + corner); }

// Corner at the tail (-1) and head of a slot in the arc's declared direction.
std::pair<int, int> arc_ends(const Slot& s, int slot) {
  const int start = prev_slot(slot);  // traversal start corner
  const int end = slot;               // traversal end corner
  return s.sign == Sign::plus ? std::pair{start, end} : std::pair{end, start};
}

}  // namespace

Triangulation::Triangulation(std::vector<Arc> arcs, std::vector<Triangle> triangles)
    : arcs_(std::move(arcs)), triangles_(std::move(triangles)), occurrences_(arcs_.size()) {
  for (int t = 0; t < static_cast<int>(triangles_.size()); ++t) {
    for (int s = 0; s < 3; ++s) {
      const int a = triangles_[static_cast<std::size_t>(t)].slots[static_cast<std::size_t>(s)].arc;
      if (a >= 0 && a < static_cast<int>(arcs_.size())) occurrences_[static_cast<std::size_t>(a)].push_back({t, s});
    }
  }
  std::vector<std::pair<int, int>> internal;
  for (int a = 0; a < static_cast<int>(arcs_.size()); ++a)
    if (arcs_[static_cast<std::size_t>(a)].internal()) internal.emplace_back(arcs_[static_cast<std::size_t>(a)].index, a);
  std::sort(internal.begin(), internal.end());
  for (auto [idx, a] : internal) internal_ids_.push_back(a);
}

std::optional<int> Triangulation::find_arc(std::string_view label) const {
  for (int a = 0; a < static_cast<int>(arcs_.size()); ++a)
    if (arcs_[static_cast<std::size_t>(a)].label == label) return a;
  return std::nullopt;
}

std::optional<SlotRef> Triangulation::across(SlotRef r) const {
  const auto occ = occurrences(slot(r).arc);
  for (const SlotRef& o : occ)
    if (!(o == r)) return o;
  return std::nullopt;
}

std::optional<int> Triangulation::slot_of(int t, int arc) const {
  const Triangle& tri = triangle(t);
  for (int s = 0; s < 3; ++s)
    if (tri.slots[static_cast<std::size_t>(s)].arc == arc) return s;
  return std::nullopt;
}

std::string Triangulation::canonical_key() const {
  std::vector<std::string> cycles;
  for (const Triangle& tri : triangles_) {
    std::array<std::string, 3> labels;
    for (int s = 0; s < 3; ++s) labels[static_cast<std::size_t>(s)] = arc(tri.slots[static_cast<std::size_t>(s)].arc).label;
    const auto first = static_cast<int>(std::min_element(labels.begin(), labels.end()) - labels.begin());
    std::string cycle;
    for (int s = 0; s < 3; ++s) {
      if (s) cycle += ' ';
      cycle += labels[static_cast<std::size_t>((first + s) % 3)];
    }
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end());
  std::string key;
  for (const auto& c : cycles) key += "(" + c + ")";
  return key;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) os << i.code << ": " << i.message << '\n';
  return os.str();
}

ValidationReport validate(const Triangulation& t) {
  ValidationReport report;
  auto issue = [&](std::string code, std::string msg) { report.issues.push_back({std::move(code), std::move(msg)}); };

  const int narcs = static_cast<int>(t.arcs().size());
  std::set<std::string> labels;
  std::vector<int> indices;
  for (const Arc& a : t.arcs()) {
    if (!labels.insert(a.label).second) issue("surface.duplicate_label", "arc label '" + a.label + "' declared twice");
    if (a.internal()) indices.push_back(a.index);
  }
  std::sort(indices.begin(), indices.end());
  for (int i = 0; i < static_cast<int>(indices.size()); ++i)
    if (indices[static_cast<std::size_t>(i)] != i + 1) {
      issue("surface.bad_index", "internal arc indices are not exactly 1..n");
      break;
    }

  if (t.triangles().empty()) issue("surface.empty", "no triangles");

  for (int ti = 0; ti < static_cast<int>(t.triangles().size()); ++ti) {
    const Triangle& tri = t.triangle(ti);
    bool in_range = true;
    for (const Slot& s : tri.slots)
      if (s.arc < 0 || s.arc >= narcs) {
        issue("surface.unknown_arc", "triangle " + std::to_string(ti + 1) + " references an unknown arc");
        in_range = false;
      }
    if (!in_range) continue;
    const auto& sl = tri.slots;
    if (sl[0].arc == sl[1].arc || sl[1].arc == sl[2].arc || sl[0].arc == sl[2].arc)
      issue("surface.duplicate_arc", "duplicate arc in triangle " + std::to_string(ti + 1));
  }
  if (!report.ok()) return report;

  for (int a = 0; a < narcs; ++a) {
    const Arc& arc = t.arc(a);
    const auto occ = t.occurrences(a);
    if (arc.internal()) {
      if (occ.size() != 2) {
        issue("surface.internal_occurrences", "internal arc '" + arc.label + "' occurs " +
                                                  std::to_string(occ.size()) + " times, expected 2");
      } else if (t.slot(occ[0]).sign == t.slot(occ[1]).sign) {
        issue("surface.equal_signs", "internal arc '" + arc.label + "' occurs twice with the same sign");
      }
    } else if (occ.size() != 1) {
      issue("surface.boundary_occurrences", "boundary arc '" + arc.label + "' occurs " +
                                                std::to_string(occ.size()) + " times, expected 1");
    }
  }

  UnionFind uf(t.triangles().size());
  for (int a = 0; a < narcs; ++a) {
    const auto occ = t.occurrences(a);
    for (std::size_t i = 1; i < occ.size(); ++i)
      uf.unite(static_cast<std::size_t>(occ[0].triangle), static_cast<std::size_t>(occ[i].triangle));
  }
  for (std::size_t ti = 1; ti < t.triangles().size(); ++ti)
    if (uf.find(ti) != uf.find(0)) {
      issue("surface.disconnected", "triangle " + std::to_string(ti + 1) + " is not connected to triangle 1");
      break;
    }
  return report;
}

void require_valid(const Triangulation& t) {
  const auto report = validate(t);
  if (!report.ok()) throw Error(report.issues.front().code, report.issues.front().message);
}

std::vector<std::array<int, 3>> corner_classes(const Triangulation& t) {
  const auto ntri = t.triangles().size();
  UnionFind uf(3 * ntri);
  for (int a = 0; a < static_cast<int>(t.arcs().size()); ++a) {
    const auto occ = t.occurrences(a);
    if (occ.size() != 2) continue;
    const auto [tail0, head0] = arc_ends(t.slot(occ[0]), occ[0].slot);
    const auto [tail1, head1] = arc_ends(t.slot(occ[1]), occ[1].slot);
    uf.unite(corner_id(occ[0].triangle, tail0), corner_id(occ[1].triangle, tail1));
    uf.unite(corner_id(occ[0].triangle, head0), corner_id(occ[1].triangle, head1));
  }
  std::map<std::size_t, int> ids;
  std::vector<std::array<int, 3>> out(ntri);
  for (std::size_t ti = 0; ti < ntri; ++ti)
    for (int c = 0; c < 3; ++c) {
      const auto root = uf.find(corner_id(static_cast<int>(ti), c));
      auto [it, inserted] = ids.emplace(root, static_cast<int>(ids.size()));
      out[ti][static_cast<std::size_t>(c)] = it->second;
    }
  return out;
}

SurfaceStats surface_stats(const Triangulation& t) {
  require_valid(t);
  const auto corners = corner_classes(t);
  int c = 0;
  for (const auto& tri : corners)
    for (int v : tri) c = std::max(c, v + 1);

  UnionFind boundary(static_cast<std::size_t>(c));
  for (int ti = 0; ti < static_cast<int>(t.triangles().size()); ++ti)
    for (int s = 0; s < 3; ++s) {
      if (t.arc(t.triangle(ti).slots[static_cast<std::size_t>(s)].arc).internal()) continue;
      const auto& cc = corners[static_cast<std::size_t>(ti)];
      boundary.unite(static_cast<std::size_t>(cc[static_cast<std::size_t>(prev_slot(s))]),
                     static_cast<std::size_t>(cc[static_cast<std::size_t>(s)]));
    }
  std::set<std::size_t> roots;
  for (int v = 0; v < c; ++v) roots.insert(boundary.find(static_cast<std::size_t>(v)));
  const int b = static_cast<int>(roots.size());

  const int e = static_cast<int>(t.arcs().size());
  const int f = static_cast<int>(t.triangles().size());
  const int twice_genus = 2 - b - (c - e + f);
  SurfaceStats st{twice_genus / 2, b, c, t.internal_count()};
  if (twice_genus < 0 || twice_genus % 2 != 0 || st.internal_arcs != 6 * st.genus + 3 * b + c - 6)
    throw Error("surface.inconsistent", "arc count violates n = 6g + 3b + c - 6 (g=" + std::to_string(st.genus) +
                                            ", b=" + std::to_string(b) + ", c=" + std::to_string(c) +
                                            ", n=" + std::to_string(st.internal_arcs) + ")");
  return st;
}

Triangulation flip(const Triangulation& t, int arc) {
  if (arc < 0 || arc >= static_cast<int>(t.arcs().size())) throw Error("surface.unknown_arc", "no such arc");
  if (!t.arc(arc).internal())
    throw Error("surface.flip_boundary", "cannot flip boundary arc '" + t.arc(arc).label + "'");
  const auto occ = t.occurrences(arc);
  if (occ.size() != 2) throw Error("surface.invalid", "arc '" + t.arc(arc).label + "' is not glued");
  if (occ[0].triangle == occ[1].triangle)
    throw Error("surface.ambiguous_side", "arc '" + t.arc(arc).label + "' bounds the same triangle on both sides");

  const SlotRef pa = t.slot(occ[0]).sign == Sign::plus ? occ[0] : occ[1];
  const SlotRef pb = t.slot(occ[0]).sign == Sign::plus ? occ[1] : occ[0];
  const Triangle& A = t.triangle(pa.triangle);
  const Triangle& B = t.triangle(pb.triangle);
  const Slot a1 = A.slots[static_cast<std::size_t>(next_slot(pa.slot))];
  const Slot a2 = A.slots[static_cast<std::size_t>(prev_slot(pa.slot))];
  const Slot b1 = B.slots[static_cast<std::size_t>(next_slot(pb.slot))];
  const Slot b2 = B.slots[static_cast<std::size_t>(prev_slot(pb.slot))];

  // Quadrilateral u -b1- z -b2- v -a1- w -a2- u, old diagonal u->v, new w->z.
  std::vector<Triangle> tris = t.triangles();
  tris[static_cast<std::size_t>(pa.triangle)] = Triangle{{Slot{arc, Sign::plus}, b2, a1}};
  tris[static_cast<std::size_t>(pb.triangle)] = Triangle{{Slot{arc, Sign::minus}, a2, b1}};
  return Triangulation(t.arcs(), std::move(tris));
}

Triangulation polygon(int c) {
  if (c < 3) throw Error("surface.bad_parameter", "polygon needs at least 3 marked points");
  std::vector<Arc> arcs;
  for (int m = 3; m <= c - 1; ++m) arcs.push_back({"t" + std::to_string(m - 2), ArcKind::internal, m - 2});
  const int nint = c - 3;
  for (int m = 1; m <= c; ++m) arcs.push_back({"b" + std::to_string(m), ArcKind::boundary, 0});
  auto diagonal = [&](int m) { return m - 3; };  // arc id of (1, m)
  auto boundary = [&](int m) { return nint + m - 1; };
  std::vector<Triangle> tris;
  for (int m = 2; m <= c - 1; ++m) {
    const Slot first = m == 2 ? Slot{boundary(1), Sign::plus} : Slot{diagonal(m), Sign::plus};
    const Slot side{boundary(m), Sign::plus};
    const Slot last = m + 1 == c ? Slot{boundary(c), Sign::plus} : Slot{diagonal(m + 1), Sign::minus};
    tris.push_back(Triangle{{first, side, last}});
  }
  return Triangulation(std::move(arcs), std::move(tris));
}

Triangulation annulus(int p, int q) {
  if (p < 1 || q < 1) throw Error("surface.bad_parameter", "annulus needs at least one marked point per boundary");
  const int spokes = p + q;
  std::vector<Arc> arcs;
  for (int m = 0; m < spokes; ++m) arcs.push_back({"s" + std::to_string(m), ArcKind::internal, m + 1});
  for (int a = 0; a < p; ++a) arcs.push_back({"o" + std::to_string(a), ArcKind::boundary, 0});
  for (int b = 0; b < q; ++b) arcs.push_back({"i" + std::to_string(b), ArcKind::boundary, 0});
  std::vector<Triangle> tris;
  // Spokes point from the inner to the outer circle; triangle m lies between
  // spoke m and spoke m+1.
  for (int m = 0; m < spokes; ++m) {
    const int left = m;
    const int right = (m + 1) % spokes;
    if (m < p) {
      tris.push_back(Triangle{{Slot{right, Sign::plus}, Slot{spokes + m, Sign::plus}, Slot{left, Sign::minus}}});
    } else {
      tris.push_back(
          Triangle{{Slot{spokes + p + (m - p), Sign::plus}, Slot{right, Sign::plus}, Slot{left, Sign::minus}}});
    }
  }
  return Triangulation(std::move(arcs), std::move(tris));
}

}  // namespace clustexp
