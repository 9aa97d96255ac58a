#pragma once

#include "clustexp/error.hpp"
#include "clustexp/laurent.hpp"
#include "clustexp/strings.hpp"
#include "clustexp/surface.hpp"

#include <string>
#include <vector>

namespace clustexp {

enum class Method { paths, modules };

struct ExpansionResult {
  LaurentPoly polynomial;
  IntVector index;
  Integer path_count = 0;
  MuTable mu_table;
  Method method = Method::paths;
};

IntVector index_of_curve(const Triangulation& t, const CurveCrossing& c);

// Sum of x(alpha) y(alpha) over all complete paths.
ExpansionResult expansion_paths(const Triangulation& t, const CurveCrossing& c, Exec exec = Exec::serial);

// Sum over e of mu_e X^{Ind + B e} Y^e.
ExpansionResult expansion_modules(const Triangulation& t, const CurveCrossing& c);

LaurentPoly assemble_from_mu(const MuTable& mu, const IntVector& index, const IntMatrix& b);

// Coefficient-free specialization y := 1.
LaurentPoly schiffler_thomas(const Triangulation& t, const CurveCrossing& c);

struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckEntry> checks;
  bool ok() const;
  std::string render() const;
};

// Cross-checks two already computed results.
VerifyReport check_results(const Triangulation& t, const CurveCrossing& c, const ExpansionResult& by_paths,
                           const ExpansionResult& by_modules);

VerifyReport verify_curve(const Triangulation& t, const CurveCrossing& c, bool with_oracle, int max_depth);

}  // namespace clustexp
