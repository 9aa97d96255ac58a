#pragma once

#include "clustexp/error.hpp"
#include "clustexp/laurent.hpp"
#include "clustexp/quiver.hpp"
#include "clustexp/surface.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace clustexp {

// One triangle visited by a curve. `entry` is the slot crossed to get in
// (-1 for the start triangle), `exit` the slot crossed to leave (-1 for the
// end triangle).
struct CurveStep {
  int triangle = -1;
  int entry = -1;
  int exit = -1;

  friend bool operator==(const CurveStep&, const CurveStep&) = default;
};

// A curve encoded by its start triangle and ordered crossings, or a curve
// equal to an internal arc of the triangulation (d = 0).
struct CurveCrossing {
  std::optional<int> arc;        // degenerate form arc(tau_i)
  std::vector<int> crossings;    // arc ids tau_{i_1} .. tau_{i_d}
  std::vector<CurveStep> steps;  // triangles 0..d

  int d() const { return static_cast<int>(crossings.size()); }
  bool is_arc() const { return arc.has_value(); }
  int start_triangle() const { return steps.empty() ? -1 : steps.front().triangle; }

  friend bool operator==(const CurveCrossing&, const CurveCrossing&) = default;
};

// Corner and side bookkeeping around the ends of a curve and inside each
// visited triangle.
struct CurveEnds {
  int start_clockwise = -1;  // tau_{i_0}
  int start_third = -1;      // tau_{i_-1}
  int end_clockwise = -1;    // tau_{i_{d+1}}
  int end_third = -1;        // tau_{i_{d+2}}
};

CurveCrossing derive_curve(const Triangulation& t, int start_triangle, std::span<const int> crossings);
CurveCrossing arc_curve(const Triangulation& t, int arc);
CurveEnds curve_ends(const Triangulation& t, const CurveCrossing& c);
// tau_{j_k} for 1 <= k <= d-1.
int third_arc(const Triangulation& t, const CurveCrossing& c, int k);

CurveCrossing reversed(const Triangulation& t, const CurveCrossing& c);

// Re-expresses c relative to flip(t, arc). Crossing the new diagonal is
// recorded under the flipped arc's label. A curve that becomes the new
// diagonal is returned in arc form.
CurveCrossing transport_through_flip(const Triangulation& t, const CurveCrossing& c, int arc);

// Label-level key independent of orientation and triangle numbering.
std::string curve_key(const Triangulation& t, const CurveCrossing& c);
// Re-expresses c, given in `from`, inside `to`, which must carry the same
// triangles up to relabelling of triangle indices and slot rotation.
CurveCrossing relocate(const Triangulation& from, const CurveCrossing& c, const Triangulation& to);

std::string render_curve(const Triangulation& t, const CurveCrossing& c);

// ---------------------------------------------------------------------------

struct Letter {
  int arrow = -1;
  bool forward = true;  // arrow points from position k to k+1

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct StringWord {
  std::vector<int> vertices;  // internal indices of tau_{i_1} .. tau_{i_d}
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(vertices.size()); }
};

StringWord string_of_curve(const Triangulation& t, const QuiverWithPotential& q, const CurveCrossing& c);
// Throws Error("strings.invalid_word") if w violates the string invariants.
void check_string(const QuiverWithPotential& q, const StringWord& w);
std::string render_string(const Triangulation& t, const StringWord& w);

// Sorted 1-based positions.
struct PositionSubset {
  std::vector<int> positions;

  bool contains(int p) const;
  std::size_t size() const { return positions.size(); }
  friend bool operator==(const PositionSubset&, const PositionSubset&) = default;
  friend auto operator<=>(const PositionSubset& a, const PositionSubset& b) {
    if (a.positions.size() != b.positions.size()) return a.positions.size() <=> b.positions.size();
    return a.positions <=> b.positions;
  }
};

struct Interval {
  int first = 0;
  int last = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::vector<Interval> interval_decomposition(const PositionSubset& s);
std::string render_subset(const PositionSubset& s);

// Closed under outgoing letters: p in I and a letter p -> q forces q in I.
bool is_closed_subset(const StringWord& w, const PositionSubset& s);

// S(gamma) ordered by size, then lexicographically.
std::vector<PositionSubset> closed_subsets(const StringWord& w);

using DimensionVector = std::vector<int>;
using MuTable = std::map<DimensionVector, Integer>;

DimensionVector dimension_vector(const StringWord& w, const PositionSubset& s, int n);

// Counts of S(gamma) by dimension vector, via a left-to-right sweep whose
// state is the membership of the previous position.
MuTable mu_counts(const StringWord& w, int n);

// Reference implementations scanning all 2^d subsets (d <= 62). Kept as
// oracles for closed_subsets and mu_counts.
std::vector<PositionSubset> closed_subsets_bruteforce(const StringWord& w, Exec exec = Exec::serial);
MuTable mu_counts_bruteforce(const StringWord& w, int n, Exec exec = Exec::serial);

std::string render_mu(const MuTable& mu);

}  // namespace clustexp
