#pragma once

#include "clustexp/laurent.hpp"
#include "clustexp/surface.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace clustexp {

// Vertices are internal arc indices 1..n. Parallel arrows stay distinct and
// are told apart by the triangle that witnesses them.
struct Arrow {
  int source = 0;
  int target = 0;
  int triangle = -1;
  int source_slot = -1;  // target sits in the next slot anticlockwise

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct QuiverWithPotential {
  int vertex_count = 0;
  std::vector<Arrow> arrows;
  // Indices into `arrows`, composable in the listed order, one per internal
  // triangle.
  std::vector<std::array<int, 3>> potential_cycles;

  std::optional<int> arrow_in(int triangle, int source_slot) const;
};

QuiverWithPotential build_qp(const Triangulation& t);

// b_ij = #(arrows j -> i) - #(arrows i -> j). Stored 0-based.
IntMatrix signed_adjacency(const QuiverWithPotential& q);

// Forbidden compositions (first, then second) as arrow index pairs.
std::set<std::pair<int, int>> gentle_relations(const QuiverWithPotential& q);

// Deterministic text forms used by the CLI.
std::string render_matrix(const IntMatrix& m);
std::string render_qp(const Triangulation& t, const QuiverWithPotential& q);

}  // namespace clustexp
