#pragma once

#include "clustexp/laurent.hpp"
#include "clustexp/strings.hpp"
#include "clustexp/surface.hpp"

#include <string>
#include <vector>

namespace clustexp {

// alpha_1 .. alpha_{2d+1} plus, for each crossing k, whether alpha_{2k} is
// gamma-oriented.
struct CompletePath {
  std::vector<int> arcs;
  std::vector<bool> oriented;  // size d, oriented[k-1] for alpha_{2k}

  friend bool operator==(const CompletePath&, const CompletePath&) = default;
};

// The path whose gamma-oriented even arcs are exactly the positions in s.
// Throws Error("paths.not_closed") if no such path exists.
CompletePath psi(const Triangulation& t, const CurveCrossing& c, const PositionSubset& s);

// Reads the gamma-oriented positions back off the arc sequence. Throws
// Error("paths.malformed") when the arcs are not a complete path of c or
// disagree with the recorded flags.
PositionSubset phi(const Triangulation& t, const CurveCrossing& c, const CompletePath& p);
PositionSubset phi(const Triangulation& t, const CurveCrossing& c, const std::vector<int>& arcs);

CompletePath alpha_zero(const Triangulation& t, const CurveCrossing& c);
CompletePath alpha_one(const Triangulation& t, const CurveCrossing& c);

std::vector<CompletePath> enumerate_paths(const Triangulation& t, const CurveCrossing& c);

// x(alpha) * y(alpha).
LaurentPoly path_weight(const Triangulation& t, const CurveCrossing& c, const CompletePath& p);

std::string render_path(const Triangulation& t, const CompletePath& p);

}  // namespace clustexp
