#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clustexp {

enum class ArcKind { internal, boundary };

// Whether a triangle traverses an arc along its declared direction (+) or
// against it (-).
enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct Arc {
  std::string label;
  ArcKind kind = ArcKind::internal;
  int index = 0;  // 1..n for internal arcs, 0 for boundary arcs

  bool internal() const { return kind == ArcKind::internal; }
};

struct Slot {
  int arc = -1;  // position in Triangulation::arcs()
  Sign sign = Sign::plus;

  friend bool operator==(const Slot&, const Slot&) = default;
};

// Slots are listed anticlockwise. Corner c sits between slot c and slot c+1:
// traversing slot c runs from corner c-1 to corner c.
struct Triangle {
  std::array<Slot, 3> slots;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct SlotRef {
  int triangle = -1;
  int slot = -1;

  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

inline int next_slot(int s) { return (s + 1) % 3; }
inline int prev_slot(int s) { return (s + 2) % 3; }

// Oriented combinatorial map of an unpunctured marked surface. Holds
// arbitrary (possibly invalid) data; call validate() before relying on the
// structural invariants.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(std::vector<Arc> arcs, std::vector<Triangle> triangles);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Arc& arc(int id) const { return arcs_.at(static_cast<std::size_t>(id)); }
  const Triangle& triangle(int t) const { return triangles_.at(static_cast<std::size_t>(t)); }
  const Slot& slot(SlotRef r) const { return triangle(r.triangle).slots.at(static_cast<std::size_t>(r.slot)); }

  int internal_count() const { return static_cast<int>(internal_ids_.size()); }
  // Arc id of the internal arc with index i (1-based).
  int internal_arc(int index) const { return internal_ids_.at(static_cast<std::size_t>(index - 1)); }
  std::optional<int> find_arc(std::string_view label) const;

  std::span<const SlotRef> occurrences(int arc) const {
    return occurrences_.at(static_cast<std::size_t>(arc));
  }
  // The other slot carrying the same arc, if the arc is glued.
  std::optional<SlotRef> across(SlotRef r) const;
  std::optional<int> slot_of(int triangle, int arc) const;

  // Canonical label-level description: each triangle as its anticlockwise
  // label cycle rotated to start at the smallest label, triangles sorted.
  // Equal keys mean isomorphic triangulations with the same labels.
  std::string canonical_key() const;

  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.arcs_ == b.arcs_ && a.triangles_ == b.triangles_;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<SlotRef>> occurrences_;
  std::vector<int> internal_ids_;
};

inline bool operator==(const Arc& a, const Arc& b) {
  return a.label == b.label && a.kind == b.kind && a.index == b.index;
}

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate(const Triangulation& t);
// Throws Error with the first issue's code when t is invalid.
void require_valid(const Triangulation& t);

struct SurfaceStats {
  int genus = 0;
  int boundary_components = 0;
  int marked_points = 0;
  int internal_arcs = 0;

  friend bool operator==(const SurfaceStats&, const SurfaceStats&) = default;
};

// Marked-point class of every corner, indexed [triangle][corner].
std::vector<std::array<int, 3>> corner_classes(const Triangulation& t);

SurfaceStats surface_stats(const Triangulation& t);

// Replaces internal arc `arc` by the other diagonal of its quadrilateral. The
// label is kept; the two affected triangles keep their positions.
Triangulation flip(const Triangulation& t, int arc);

// Fan triangulation of a disc with c marked points: internal arcs t1..t{c-3}
// are the diagonals from vertex 1 to vertices 3..c-1; boundary arc b{m} joins
// vertex m to m+1 (b{c} joins c to 1). Triangle m-2 (0-based) is (1, m, m+1).
Triangulation polygon(int c);

// Annulus with p marked points on the outer and q on the inner boundary,
// triangulated by p+q spokes s0..s{p+q-1} (outer steps first). Outer boundary
// arcs o0..o{p-1}, inner boundary arcs i0..i{q-1}.
Triangulation annulus(int p, int q);

}  // namespace clustexp
