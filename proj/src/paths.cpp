#include "clustexp/paths.hpp"

#include "clustexp/quiver.hpp"

#include <optional>

namespace clustexp {

namespace {

int slot_arc(const Triangulation& t, int triangle, int slot) {
  return t.triangle(triangle).slots[static_cast<std::size_t>(slot)].arc;
}

// Odd arc alpha_{2k+1} inside triangle k given the flags of its neighbouring
// even arcs (absent flags at the two ends are nullopt).
std::optional<int> odd_arc(const Triangulation& t, const CurveCrossing& c, int k, std::optional<bool> before,
                           std::optional<bool> after) {
  const CurveStep& s = c.steps[static_cast<std::size_t>(k)];
  if (!before) return slot_arc(t, s.triangle, *after ? next_slot(s.exit) : prev_slot(s.exit));
  if (!after) return slot_arc(t, s.triangle, *before ? next_slot(s.entry) : prev_slot(s.entry));
  const int third = 3 - s.entry - s.exit;
  const bool forward = s.exit == next_slot(s.entry);
  if (*before == *after) return slot_arc(t, s.triangle, *before == forward ? s.exit : s.entry);
  if (forward ? *before : *after) return std::nullopt;
  return slot_arc(t, s.triangle, third);
}

void require_crossing_form(const CurveCrossing& c) {
  if (c.is_arc()) throw Error("paths.arc_form", "complete paths need a curve with crossings");
}

}  // namespace

CompletePath psi(const Triangulation& t, const CurveCrossing& c, const PositionSubset& s) {
  require_crossing_form(c);
  const int d = c.d();
  CompletePath p;
  for (int k = 1; k <= d; ++k) p.oriented.push_back(s.contains(k));
  for (int q : s.positions)
    if (q < 1 || q > d) throw Error("paths.not_closed", "position " + std::to_string(q) + " out of range");
  for (int k = 0; k <= d; ++k) {
    const std::optional<bool> before = k == 0 ? std::nullopt : std::optional<bool>(p.oriented[static_cast<std::size_t>(k - 1)]);
    const std::optional<bool> after = k == d ? std::nullopt : std::optional<bool>(p.oriented[static_cast<std::size_t>(k)]);
    const auto arc = odd_arc(t, c, k, before, after);
    if (!arc) throw Error("paths.not_closed", render_subset(s) + " is not closed at position " + std::to_string(k));
    p.arcs.push_back(*arc);
    if (k < d) p.arcs.push_back(c.crossings[static_cast<std::size_t>(k)]);
  }
  return p;
}

PositionSubset phi(const Triangulation& t, const CurveCrossing& c, const std::vector<int>& arcs) {
  require_crossing_form(c);
  const int d = c.d();
  auto malformed = [](const std::string& m) { return Error("paths.malformed", m); };
  if (static_cast<int>(arcs.size()) != 2 * d + 1)
    throw malformed("expected " + std::to_string(2 * d + 1) + " arcs, got " + std::to_string(arcs.size()));
  for (int k = 1; k <= d; ++k)
    if (arcs[static_cast<std::size_t>(2 * k - 1)] != c.crossings[static_cast<std::size_t>(k - 1)])
      throw malformed("arc " + std::to_string(2 * k) + " is not crossing " + std::to_string(k));

  // Flags are read off one triangle at a time; each odd arc fixes the flag
  // after it given the flag before it.
  std::vector<bool> flags;
  for (int k = 0; k < d; ++k) {
    const int arc = arcs[static_cast<std::size_t>(2 * k)];
    const std::optional<bool> before = k == 0 ? std::nullopt : std::optional<bool>(flags.back());
    std::optional<bool> found;
    for (bool cand : {false, true}) {
      if (odd_arc(t, c, k, before, cand) == arc) {
        if (found) throw malformed("odd arc " + std::to_string(2 * k + 1) + " is ambiguous");
        found = cand;
      }
    }
    if (!found) throw malformed("odd arc " + std::to_string(2 * k + 1) + " does not fit");
    flags.push_back(*found);
  }
  PositionSubset s;
  for (int k = 1; k <= d; ++k)
    if (flags[static_cast<std::size_t>(k - 1)]) s.positions.push_back(k);
  CompletePath check;
  try {
    check = psi(t, c, s);
  } catch (const Error&) {
    throw malformed("decoded subset " + render_subset(s) + " is not closed");
  }
  if (check.arcs != arcs) throw malformed("arc sequence is not a complete path");
  return s;
}

PositionSubset phi(const Triangulation& t, const CurveCrossing& c, const CompletePath& p) {
  const PositionSubset s = phi(t, c, p.arcs);
  if (!p.oriented.empty()) {
    if (static_cast<int>(p.oriented.size()) != c.d()) throw Error("paths.malformed", "wrong number of flags");
    for (int k = 1; k <= c.d(); ++k)
      if (p.oriented[static_cast<std::size_t>(k - 1)] != s.contains(k))
        throw Error("paths.malformed", "flag " + std::to_string(k) + " disagrees with the arcs");
  }
  return s;
}

CompletePath alpha_zero(const Triangulation& t, const CurveCrossing& c) { return psi(t, c, PositionSubset{}); }

CompletePath alpha_one(const Triangulation& t, const CurveCrossing& c) {
  PositionSubset all;
  for (int k = 1; k <= c.d(); ++k) all.positions.push_back(k);
  return psi(t, c, all);
}

std::vector<CompletePath> enumerate_paths(const Triangulation& t, const CurveCrossing& c) {
  if (c.is_arc()) return {CompletePath{{*c.arc}, {}}};
  const StringWord w = string_of_curve(t, build_qp(t), c);
  std::vector<CompletePath> out;
  for (const PositionSubset& s : closed_subsets(w)) out.push_back(psi(t, c, s));
  return out;
}

LaurentPoly path_weight(const Triangulation& t, const CurveCrossing& c, const CompletePath& p) {
  const int n = t.internal_count();
  Monomial m(n);
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    const Arc& a = t.arc(p.arcs[i]);
    if (!a.internal()) continue;
    m.x[static_cast<std::size_t>(a.index - 1)] += i % 2 == 0 ? 1 : -1;
  }
  for (int k = 1; k <= c.d(); ++k)
    if (p.oriented.at(static_cast<std::size_t>(k - 1)))
      ++m.y[static_cast<std::size_t>(t.arc(c.crossings[static_cast<std::size_t>(k - 1)]).index - 1)];
  return LaurentPoly::monomial(1, std::move(m));
}

std::string render_path(const Triangulation& t, const CompletePath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) s += (i ? " " : "") + t.arc(p.arcs[i]).label;
  return s;
}

}  // namespace clustexp
