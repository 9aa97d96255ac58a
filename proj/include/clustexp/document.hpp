#pragma once

#include "clustexp/strings.hpp"
#include "clustexp/surface.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace clustexp {

struct NamedCurve {
  std::string name;
  CurveCrossing curve;
};

// Line-based surface file:
//
//   arc <name> internal|boundary
//   triangle <+|-><name> <+|-><name> <+|-><name>    (anticlockwise)
//   curve <name> from <triangle-index> crosses <name>...
//   curve <name> arc <name>
//
// Triangle indices are 1-based in file order. `#` starts a comment.
struct SurfaceDocument {
  Triangulation triangulation;
  std::vector<NamedCurve> curves;

  const NamedCurve* find_curve(std::string_view name) const;
};

// Throws Error("document.syntax") or Error("document.invalid") with a
// "line L, column C: ..." message.
SurfaceDocument parse_surface(std::string_view text);
SurfaceDocument load_surface(const std::string& path);

std::string render_surface(const SurfaceDocument& doc);

}  // namespace clustexp
