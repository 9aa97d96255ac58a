#pragma once

#include "clustexp/document.hpp"
#include "clustexp/strings.hpp"
#include "clustexp/surface.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace support {

using namespace clustexp;

inline SurfaceDocument fixture(const std::string& name) { return load_surface(std::string(FIXTURE_DIR) + "/" + name); }

inline int arc_id(const Triangulation& t, const std::string& label) {
  auto a = t.find_arc(label);
  if (!a) throw std::runtime_error("no arc " + label);
  return *a;
}

inline CurveCrossing curve(const Triangulation& t, int start_1based, const std::vector<std::string>& labels) {
  std::vector<int> ids;
  for (const auto& l : labels) ids.push_back(arc_id(t, l));
  return derive_curve(t, start_1based - 1, ids);
}

inline std::vector<std::string> labels_of(const Triangulation& t, const std::vector<int>& arcs) {
  std::vector<std::string> out;
  for (int a : arcs) out.push_back(t.arc(a).label);
  return out;
}

// Convex polygon model: every arc is a vertex pair, vertices numbered
// anticlockwise 0..c-1. Independent of the slot/sign encoding.
struct PolygonModel {
  int c = 0;
  std::map<std::string, std::pair<int, int>> ends;
  std::set<std::string> internal;

  static std::pair<int, int> edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

  // Triangles as sorted vertex triples, recovered from arc endpoints.
  std::set<std::array<int, 3>> triangles(const Triangulation& t) const {
    std::set<std::array<int, 3>> out;
    for (const Triangle& tri : t.triangles()) {
      std::set<int> v;
      for (const Slot& s : tri.slots) {
        const auto& e = ends.at(t.arc(s.arc).label);
        v.insert(e.first);
        v.insert(e.second);
      }
      if (v.size() != 3) throw std::runtime_error("triangle is not a polygon triangle");
      std::array<int, 3> a{};
      std::copy(v.begin(), v.end(), a.begin());
      out.insert(a);
    }
    return out;
  }

  std::string label_of(std::pair<int, int> e) const {
    for (const auto& [l, p] : ends)
      if (edge(p.first, p.second) == edge(e.first, e.second)) return l;
    return "";
  }

  // Flip of diagonal `label`: its quadrilateral's other two vertices.
  std::pair<int, int> flipped(const Triangulation& t, const std::string& label) const {
    const auto [a, b] = ends.at(label);
    std::vector<int> others;
    for (const auto& tri : triangles(t))
      if (std::count(tri.begin(), tri.end(), a) && std::count(tri.begin(), tri.end(), b))
        for (int v : tri)
          if (v != a && v != b) others.push_back(v);
    if (others.size() != 2) throw std::runtime_error("not a quadrilateral");
    return edge(others[0], others[1]);
  }

  static bool cross(std::pair<int, int> p, std::pair<int, int> q) {
    auto inside = [&](int v) { return p.first < v && v < p.second; };
    if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) return false;
    return inside(q.first) != inside(q.second);
  }

  // Arrows side_i -> side_{i+1} of each triangle in anticlockwise order when
  // both sides are internal, as (source label, target label).
  std::multiset<std::pair<std::string, std::string>> arrows(const Triangulation& t) const {
    std::multiset<std::pair<std::string, std::string>> out;
    for (const auto& tri : triangles(t)) {
      const std::array<std::string, 3> side{label_of({tri[0], tri[1]}), label_of({tri[1], tri[2]}),
                                            label_of({tri[2], tri[0]})};
      for (int i = 0; i < 3; ++i) {
        const auto& a = side[static_cast<std::size_t>(i)];
        const auto& b = side[static_cast<std::size_t>((i + 1) % 3)];
        if (internal.count(a) && internal.count(b)) out.emplace(a, b);
      }
    }
    return out;
  }
};

// Fan polygon(c): t{m-2} = (1,m), b{m} = (m,m+1), vertices 1..c mapped to 0..c-1.
inline PolygonModel fan_model(int c) {
  PolygonModel m;
  m.c = c;
  for (int v = 3; v <= c - 1; ++v) {
    m.ends["t" + std::to_string(v - 2)] = {0, v - 1};
    m.internal.insert("t" + std::to_string(v - 2));
  }
  for (int v = 1; v <= c; ++v) m.ends["b" + std::to_string(v)] = PolygonModel::edge(v - 1, v % c);
  return m;
}

// Octagon fixture with N=0, NW=1, W=2, SW=3, S=4, SE=5, E=6, NE=7.
inline PolygonModel octagon_model() {
  enum { N, NW, W, SW, S, SE, E, NE };
  PolygonModel m;
  m.c = 8;
  m.ends = {{"t1", {N, W}},   {"t2", {N, SW}},  {"t3", {N, S}},   {"t4", {N, E}},   {"t5", {S, E}},
            {"t6", {SE, E}},  {"t7", {S, SE}},  {"t8", {SW, S}},  {"t9", {W, SW}},  {"t10", {NW, W}},
            {"t11", {N, NW}}, {"t12", {N, NE}}, {"t13", {E, NE}}};
  for (auto& [l, e] : m.ends) e = PolygonModel::edge(e.first, e.second);
  m.internal = {"t1", "t2", "t3", "t4", "t5"};
  return m;
}

// Random non-backtracking walk through internal arcs with d crossings.
inline std::vector<int> random_walk(const Triangulation& t, std::mt19937& rng, int d, int& start) {
  std::uniform_int_distribution<int> tri_dist(0, static_cast<int>(t.triangles().size()) - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    start = tri_dist(rng);
    int tri = start, entry = -1;
    std::vector<int> out;
    while (static_cast<int>(out.size()) < d) {
      std::vector<int> options;
      for (int s = 0; s < 3; ++s)
        if (s != entry && t.arc(t.triangle(tri).slots[static_cast<std::size_t>(s)].arc).internal()) options.push_back(s);
      if (options.empty()) break;
      const int s = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
      const int arc = t.triangle(tri).slots[static_cast<std::size_t>(s)].arc;
      out.push_back(arc);
      const auto other = *t.across({tri, s});
      tri = other.triangle;
      entry = other.slot;
    }
    if (static_cast<int>(out.size()) == d) return out;
  }
  return {};
}

// Oracle closure test written straight from the definition: for each letter
// between positions k and k+1, the arrow's source position forces its target.
inline bool closed_by_definition(const StringWord& w, unsigned long long mask) {
  for (int k = 1; k < w.length(); ++k) {
    const bool forward = w.letters[static_cast<std::size_t>(k - 1)].forward;
    const int src = forward ? k : k + 1;
    const int dst = forward ? k + 1 : k;
    if ((mask >> (src - 1) & 1ull) && !(mask >> (dst - 1) & 1ull)) return false;
  }
  return true;
}

}  // namespace support
