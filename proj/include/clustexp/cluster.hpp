#pragma once

#include "clustexp/error.hpp"
#include "clustexp/laurent.hpp"
#include "clustexp/strings.hpp"
#include "clustexp/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace clustexp {

// 2n x n matrix: rows 0..n-1 hold the exchange matrix, rows n..2n-1 the
// coefficient rows. Indices are 0-based; mutation directions are 1-based.
struct ExtendedMatrix {
  IntMatrix rows;

  int n() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
  IntMatrix exchange() const;

  friend bool operator==(const ExtendedMatrix&, const ExtendedMatrix&) = default;
};

ExtendedMatrix principal(const IntMatrix& b);
ExtendedMatrix mutate_matrix(const ExtendedMatrix& m, int k);

struct Seed {
  ExtendedMatrix matrix;
  std::vector<LaurentPoly> cluster;
  std::vector<std::string> labels;  // arc currently attached to each position

  friend bool operator==(const Seed&, const Seed&) = default;
};

Seed initial_seed(const IntMatrix& b);
Seed initial_seed(const Triangulation& t);

// Exchange relation with principal coefficients: y_i plays x_{n+i}.
Seed mutate_seed(const Seed& s, int k);
Seed mutate_seed(const Seed& s, const std::vector<int>& sequence);

struct SyncedSeed {
  Triangulation triangulation;
  Seed seed;
};

// Flips the internal arc at position k and mutates the seed in direction k.
SyncedSeed flip_sync(const Triangulation& t, const Seed& s, int k);

// y-hat_j = prod_i x_i^{b_ij} over all 2n rows.
std::vector<LaurentPoly> y_hat(const ExtendedMatrix& m);

LaurentPoly f_polynomial(const LaurentPoly& x);
// Throws Error("cluster.not_homogeneous") for non-homogeneous input.
IntVector g_vector(const LaurentPoly& x, const IntMatrix& b);

struct OracleResult {
  bool found = false;
  int depth = 0;                 // flips needed, or depth searched when not found
  std::vector<int> flips;        // lexicographically smallest shortest sequence
  std::optional<LaurentPoly> variable;
  std::size_t states_visited = 0;
};

// Breadth-first search over flip sequences from (t0, initial seed). Returns
// the cluster variable attached to the first triangulation containing the
// arc described by `curve` (relative to t0).
OracleResult cluster_variable_by_flips(const Triangulation& t0, const CurveCrossing& curve, int max_depth,
                                       Exec exec = Exec::serial);

int default_max_depth(const Triangulation& t);

// Full exchange graph exploration, used to check the Laurent property and
// arc-keyed consistency of variables.
struct ArcVariable {
  CurveCrossing curve;  // relative to t0
  LaurentPoly variable;
};

struct ExchangeGraph {
  std::size_t triangulations = 0;
  std::size_t mutations = 0;
  int depth = 0;
  bool complete = false;  // false if max_depth cut the search short
  std::map<std::string, ArcVariable> variables;  // keyed by curve_key in t0
};

// Throws Error("cluster.inconsistent") if one arc is reached with two
// different variables; inexact exchange divisions propagate as
// Error("laurent.inexact_division").
ExchangeGraph explore_exchange_graph(const Triangulation& t0, int max_depth, Exec exec = Exec::serial);

std::string render_seed(const Seed& s);

}  // namespace clustexp
