#include "clustexp/strings.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clustexp {

namespace {

int slot_arc(const Triangulation& t, int triangle, int slot) {
  return t.triangle(triangle).slots[static_cast<std::size_t>(slot)].arc;
}

const std::string& label(const Triangulation& t, int arc) { return t.arc(arc).label; }

}  // namespace

CurveCrossing derive_curve(const Triangulation& t, int start_triangle, std::span<const int> crossings) {
  if (start_triangle < 0 || start_triangle >= static_cast<int>(t.triangles().size()))
    throw Error("strings.bad_curve", "start triangle " + std::to_string(start_triangle + 1) + " does not exist");
  if (crossings.empty()) throw Error("strings.bad_curve", "a curve must cross at least one arc");
  CurveCrossing c;
  c.crossings.assign(crossings.begin(), crossings.end());
  int tri = start_triangle;
  int entry = -1;
  for (std::size_t m = 0; m < crossings.size(); ++m) {
    const int a = crossings[m];
    if (a < 0 || a >= static_cast<int>(t.arcs().size()))
      throw Error("strings.bad_curve", "crossing " + std::to_string(m + 1) + " names an unknown arc");
    if (!t.arc(a).internal())
      throw Error("strings.bad_curve", "crossing " + std::to_string(m + 1) + " is boundary arc '" + label(t, a) + "'");
    const auto exit = t.slot_of(tri, a);
    if (!exit)
      throw Error("strings.bad_curve", "arc '" + label(t, a) + "' is not a side of triangle " + std::to_string(tri + 1));
    if (*exit == entry)
      throw Error("strings.bad_curve", "curve crosses '" + label(t, a) + "' twice in a row");
    c.steps.push_back({tri, entry, *exit});
    const auto other = t.across({tri, *exit});
    if (!other) throw Error("strings.bad_curve", "arc '" + label(t, a) + "' is not glued");
    tri = other->triangle;
    entry = other->slot;
  }
  c.steps.push_back({tri, entry, -1});
  return c;
}

CurveCrossing arc_curve(const Triangulation& t, int arc) {
  if (arc < 0 || arc >= static_cast<int>(t.arcs().size()) || !t.arc(arc).internal())
    throw Error("strings.bad_curve", "arc form needs an internal arc");
  CurveCrossing c;
  c.arc = arc;
  for (const SlotRef& r : t.occurrences(arc))
    if (t.slot(r).sign == Sign::plus) c.steps.push_back({r.triangle, -1, -1});
  return c;
}

CurveEnds curve_ends(const Triangulation& t, const CurveCrossing& c) {
  if (c.is_arc() || c.steps.size() < 2) throw Error("strings.arc_form", "curve has no crossings");
  const CurveStep& first = c.steps.front();
  const CurveStep& last = c.steps.back();
  CurveEnds e;
  e.start_clockwise = slot_arc(t, first.triangle, prev_slot(first.exit));
  e.start_third = slot_arc(t, first.triangle, next_slot(first.exit));
  e.end_clockwise = slot_arc(t, last.triangle, prev_slot(last.entry));
  e.end_third = slot_arc(t, last.triangle, next_slot(last.entry));
  return e;
}

int third_arc(const Triangulation& t, const CurveCrossing& c, int k) {
  if (k < 1 || k >= c.d()) throw Error("strings.bad_position", "third arc index out of range");
  const CurveStep& s = c.steps[static_cast<std::size_t>(k)];
  return slot_arc(t, s.triangle, 3 - s.entry - s.exit);
}

CurveCrossing reversed(const Triangulation& t, const CurveCrossing& c) {
  if (c.is_arc()) return c;
  std::vector<int> back(c.crossings.rbegin(), c.crossings.rend());
  return derive_curve(t, c.steps.back().triangle, back);
}

namespace {

enum class Port { a1, a2, b1, b2, u, v, w, z };

int group(Port p) {
  switch (p) {
    case Port::b2:
    case Port::v:
    case Port::a1:
      return 1;
    case Port::a2:
    case Port::u:
    case Port::b1:
      return 2;
    default:
      return 0;
  }
}

struct Quad {
  SlotRef p, m;  // occurrences of the flipped arc with sign + and -

  bool contains(int tri) const { return tri == p.triangle || tri == m.triangle; }

  Port side(int tri, int slot) const {
    if (tri == p.triangle) return slot == next_slot(p.slot) ? Port::a1 : Port::a2;
    return slot == next_slot(m.slot) ? Port::b1 : Port::b2;
  }

  Port corner(int tri, int c) const {
    if (tri == p.triangle) {
      if (c == prev_slot(p.slot)) return Port::u;
      return c == p.slot ? Port::v : Port::w;
    }
    if (c == prev_slot(m.slot)) return Port::v;
    return c == m.slot ? Port::u : Port::z;
  }
};

}  // namespace

CurveCrossing transport_through_flip(const Triangulation& t, const CurveCrossing& c, int arc) {
  const Triangulation after = flip(t, arc);
  const auto occ = t.occurrences(arc);
  const Quad q{t.slot(occ[0]).sign == Sign::plus ? occ[0] : occ[1],
               t.slot(occ[0]).sign == Sign::plus ? occ[1] : occ[0]};

  if (c.is_arc()) {
    if (*c.arc != arc) return arc_curve(after, *c.arc);
    const std::vector<int> one{arc};
    return derive_curve(after, q.m.triangle, one);
  }

  const int d = c.d();
  std::vector<int> out;
  std::optional<int> start;
  for (int m = 0; m <= d; ++m) {
    const CurveStep& step = c.steps[static_cast<std::size_t>(m)];
    if (q.contains(step.triangle)) {
      int r = m;
      while (r < d && c.crossings[static_cast<std::size_t>(r)] == arc) ++r;
      const CurveStep& last = c.steps[static_cast<std::size_t>(r)];
      const Port in = step.entry < 0 ? q.corner(step.triangle, next_slot(step.exit)) : q.side(step.triangle, step.entry);
      const Port exit = last.exit < 0 ? q.corner(last.triangle, next_slot(last.entry)) : q.side(last.triangle, last.exit);
      const bool crosses = group(in) != 0 && group(exit) != 0 && group(in) != group(exit);
      if (m == 0 && r == d) {
        if ((in == Port::w && exit == Port::z) || (in == Port::z && exit == Port::w)) return arc_curve(after, arc);
        if (!crosses) throw Error("strings.not_minimal", "curve is isotopic to a side of the flipped quadrilateral");
      }
      if (m == 0) {
        if (crosses) {
          start = in == Port::v ? q.p.triangle : q.m.triangle;
        } else if (group(exit) != 0) {
          start = group(exit) == 1 ? q.p.triangle : q.m.triangle;
        } else {
          throw Error("strings.not_minimal", "curve is not in minimal position");
        }
      }
      if (crosses) out.push_back(arc);
      m = r;
    } else if (m == 0) {
      start = step.triangle;
    }
    if (m < d) out.push_back(c.crossings[static_cast<std::size_t>(m)]);
  }
  return derive_curve(after, *start, out);
}

std::string curve_key(const Triangulation& t, const CurveCrossing& c) {
  if (c.is_arc()) return "arc " + label(t, *c.arc);
  auto directed = [&](const CurveCrossing& x) {
    const CurveStep& s = x.steps.front();
    std::string k = "[";
    for (int i = 0; i < 3; ++i) k += (i ? " " : "") + label(t, slot_arc(t, s.triangle, (s.exit + i) % 3));
    k += "]";
    for (int a : x.crossings) k += " " + label(t, a);
    return k;
  };
  return "curve " + std::min(directed(c), directed(reversed(t, c)));
}

CurveCrossing relocate(const Triangulation& from, const CurveCrossing& c, const Triangulation& to) {
  auto same_arc = [&](int a) {
    const auto id = to.find_arc(label(from, a));
    if (!id) throw Error("strings.bad_curve", "arc " + label(from, a) + " missing from target triangulation");
    return *id;
  };
  if (c.is_arc()) return arc_curve(to, same_arc(*c.arc));
  std::vector<int> crossings;
  for (int a : c.crossings) crossings.push_back(same_arc(a));
  const std::string key = curve_key(from, c);
  for (const SlotRef& r : to.occurrences(crossings.front())) {
    CurveCrossing cand;
    try {
      cand = derive_curve(to, r.triangle, crossings);
    } catch (const Error&) {
      continue;
    }
    if (curve_key(to, cand) == key) return cand;
  }
  throw Error("strings.bad_curve", "curve does not fit the target triangulation");
}

std::string render_curve(const Triangulation& t, const CurveCrossing& c) {
  if (c.is_arc()) return "arc " + label(t, *c.arc);
  std::string s = "from " + std::to_string(c.start_triangle() + 1) + " crosses";
  for (int a : c.crossings) s += " " + label(t, a);
  return s;
}

// ---------------------------------------------------------------------------

StringWord string_of_curve(const Triangulation& t, const QuiverWithPotential& q, const CurveCrossing& c) {
  if (c.is_arc()) return {};
  StringWord w;
  for (int a : c.crossings) w.vertices.push_back(t.arc(a).index);
  for (int k = 1; k < c.d(); ++k) {
    const CurveStep& s = c.steps[static_cast<std::size_t>(k)];
    const bool forward = s.exit == next_slot(s.entry);
    const auto arrow = q.arrow_in(s.triangle, forward ? s.entry : s.exit);
    if (!arrow) throw Error("strings.missing_arrow", "no arrow in triangle " + std::to_string(s.triangle + 1));
    w.letters.push_back({*arrow, forward});
  }
  return w;
}

void check_string(const QuiverWithPotential& q, const StringWord& w) {
  auto fail = [](const std::string& m) { throw Error("strings.invalid_word", m); };
  if (w.vertices.empty()) {
    if (!w.letters.empty()) fail("letters without vertices");
    return;
  }
  if (w.letters.size() + 1 != w.vertices.size()) fail("letter count must be one less than vertex count");
  for (int v : w.vertices)
    if (v < 1 || v > q.vertex_count) fail("vertex out of range");
  const auto rel = gentle_relations(q);
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    const Letter& l = w.letters[k];
    if (l.arrow < 0 || l.arrow >= static_cast<int>(q.arrows.size())) fail("unknown arrow");
    const Arrow& a = q.arrows[static_cast<std::size_t>(l.arrow)];
    const int from = l.forward ? a.source : a.target;
    const int to = l.forward ? a.target : a.source;
    if (from != w.vertices[k] || to != w.vertices[k + 1])
      fail("letter " + std::to_string(k + 1) + " does not join its neighbouring vertices");
    if (k == 0) continue;
    const Letter& prev = w.letters[k - 1];
    if (prev.arrow == l.arrow && prev.forward != l.forward) fail("letter followed by its inverse");
    if (prev.forward && l.forward && rel.count({prev.arrow, l.arrow}))
      fail("letters " + std::to_string(k) + "," + std::to_string(k + 1) + " compose to a relation");
    if (!prev.forward && !l.forward && rel.count({l.arrow, prev.arrow}))
      fail("inverse letters " + std::to_string(k) + "," + std::to_string(k + 1) + " compose to a relation");
  }
}

std::string render_string(const Triangulation& t, const StringWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.vertices.size(); ++k) {
    if (k) s += w.letters[k - 1].forward ? " -> " : " <- ";
    s += label(t, t.internal_arc(w.vertices[k]));
  }
  return s;
}

bool PositionSubset::contains(int p) const { return std::binary_search(positions.begin(), positions.end(), p); }

std::vector<Interval> interval_decomposition(const PositionSubset& s) {
  std::vector<Interval> out;
  for (int p : s.positions) {
    if (!out.empty() && out.back().last + 1 == p) {
      out.back().last = p;
    } else {
      out.push_back({p, p});
    }
  }
  return out;
}

std::string render_subset(const PositionSubset& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.positions.size(); ++i) r += (i ? "," : "") + std::to_string(s.positions[i]);
  return r + "}";
}

bool is_closed_subset(const StringWord& w, const PositionSubset& s) {
  for (int p : s.positions)
    if (p < 1 || p > w.length()) return false;
  for (int k = 1; k < w.length(); ++k) {
    const bool forward = w.letters[static_cast<std::size_t>(k - 1)].forward;
    if (forward && s.contains(k) && !s.contains(k + 1)) return false;
    if (!forward && s.contains(k + 1) && !s.contains(k)) return false;
  }
  return true;
}

namespace {

void extend(const StringWord& w, int p, PositionSubset& cur, std::vector<PositionSubset>& out) {
  const int d = w.length();
  if (p > d) {
    out.push_back(cur);
    return;
  }
  bool may_skip = true, may_take = true;
  if (p > 1) {
    const bool prev_in = cur.contains(p - 1);
    const bool forward = w.letters[static_cast<std::size_t>(p - 2)].forward;
    if (forward && prev_in) may_skip = false;
    if (!forward && !prev_in) may_take = false;
  }
  if (may_skip) extend(w, p + 1, cur, out);
  if (may_take) {
    cur.positions.push_back(p);
    extend(w, p + 1, cur, out);
    cur.positions.pop_back();
  }
}

}  // namespace

std::vector<PositionSubset> closed_subsets(const StringWord& w) {
  std::vector<PositionSubset> out;
  PositionSubset cur;
  extend(w, 1, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

DimensionVector dimension_vector(const StringWord& w, const PositionSubset& s, int n) {
  DimensionVector e(static_cast<std::size_t>(n), 0);
  for (int p : s.positions) ++e.at(static_cast<std::size_t>(w.vertices.at(static_cast<std::size_t>(p - 1)) - 1));
  return e;
}

MuTable mu_counts(const StringWord& w, int n) {
  const int d = w.length();
  if (d == 0) return {{DimensionVector(static_cast<std::size_t>(n), 0), Integer(1)}};
  // state[b]: counts of partial subsets of 1..p whose last membership is b.
  std::array<MuTable, 2> state;
  DimensionVector zero(static_cast<std::size_t>(n), 0);
  DimensionVector one = zero;
  ++one[static_cast<std::size_t>(w.vertices[0] - 1)];
  state[0][zero] = 1;
  state[1][one] = 1;
  for (int p = 2; p <= d; ++p) {
    const bool forward = w.letters[static_cast<std::size_t>(p - 2)].forward;
    const auto v = static_cast<std::size_t>(w.vertices[static_cast<std::size_t>(p - 1)] - 1);
    std::array<MuTable, 2> next;
    for (int prev = 0; prev < 2; ++prev)
      for (const auto& [e, count] : state[static_cast<std::size_t>(prev)]) {
        if (!(forward && prev == 1)) next[0][e] += count;
        if (!(!forward && prev == 0)) {
          DimensionVector f = e;
          ++f[v];
          next[1][f] += count;
        }
      }
    state = std::move(next);
  }
  MuTable out = std::move(state[0]);
  for (const auto& [e, count] : state[1]) out[e] += count;
  return out;
}

namespace {

PositionSubset subset_of_mask(std::uint64_t mask, int d) {
  PositionSubset s;
  for (int p = 1; p <= d; ++p)
    if (mask >> (p - 1) & 1u) s.positions.push_back(p);
  return s;
}

// fwd has bit k-1 set when letter k is forward (k in I forces k+1); bwd has
// bit k set when letter k is backward (k+1 in I forces k).
bool mask_closed(std::uint64_t fwd, std::uint64_t bwd, std::uint64_t mask) {
  return ((mask & fwd) & ~(mask >> 1)) == 0 && ((mask & bwd) & ~(mask << 1)) == 0;
}

std::vector<std::uint64_t> closed_masks(const StringWord& w, Exec exec) {
  const int d = w.length();
  if (d > 62) throw Error("strings.too_long", "brute force limited to 62 positions");
  std::uint64_t fwd = 0, bwd = 0;
  for (int k = 1; k < d; ++k) {
    if (w.letters[static_cast<std::size_t>(k - 1)].forward) {
      fwd |= std::uint64_t{1} << (k - 1);
    } else {
      bwd |= std::uint64_t{1} << k;
    }
  }
  const std::uint64_t total = std::uint64_t{1} << d;
  std::vector<std::uint64_t> out;
  if (exec == Exec::serial) {
    for (std::uint64_t m = 0; m < total; ++m)
      if (mask_closed(fwd, bwd, m)) out.push_back(m);
    return out;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (long long m = 0; m < static_cast<long long>(total); ++m)
      if (mask_closed(fwd, bwd, static_cast<std::uint64_t>(m))) local.push_back(static_cast<std::uint64_t>(m));
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PositionSubset> closed_subsets_bruteforce(const StringWord& w, Exec exec) {
  std::vector<PositionSubset> out;
  for (std::uint64_t m : closed_masks(w, exec)) out.push_back(subset_of_mask(m, w.length()));
  std::sort(out.begin(), out.end());
  return out;
}

MuTable mu_counts_bruteforce(const StringWord& w, int n, Exec exec) {
  MuTable mu;
  for (const PositionSubset& s : closed_subsets_bruteforce(w, exec)) mu[dimension_vector(w, s, n)] += 1;
  return mu;
}

std::string render_mu(const MuTable& mu) {
  std::ostringstream os;
  for (const auto& [e, count] : mu) os << format_vector(e) << ' ' << count << '\n';
  return os.str();
}

}  // namespace clustexp
