#include "clustexp/expansion.hpp"

#include "clustexp/cluster.hpp"
#include "clustexp/paths.hpp"
#include "clustexp/quiver.hpp"

#include <sstream>

namespace clustexp {

namespace {

IntMatrix exchange_of(const Triangulation& t) { return signed_adjacency(build_qp(t)); }

Integer mu_total(const MuTable& mu) {
  Integer total = 0;
  for (const auto& [e, count] : mu) total += count;
  return total;
}

}  // namespace

IntVector index_of_curve(const Triangulation& t, const CurveCrossing& c) {
  const int n = t.internal_count();
  if (c.is_arc()) {
    IntVector e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(t.arc(*c.arc).index - 1)] = 1;
    return e;
  }
  const LaurentPoly w = path_weight(t, c, alpha_zero(t, c));
  return monomial_degree(w.terms().begin()->first, exchange_of(t));
}

ExpansionResult expansion_paths(const Triangulation& t, const CurveCrossing& c, Exec exec) {
  const int n = t.internal_count();
  ExpansionResult r{LaurentPoly(n), index_of_curve(t, c), 0, {}, Method::paths};
  if (c.is_arc()) {
    r.polynomial = LaurentPoly::x(n, t.arc(*c.arc).index);
    r.path_count = 1;
    r.mu_table[DimensionVector(static_cast<std::size_t>(n), 0)] = 1;
    return r;
  }
  const StringWord w = string_of_curve(t, build_qp(t), c);
  const std::vector<PositionSubset> subsets = closed_subsets(w);
  std::vector<LaurentPoly> weights(subsets.size(), LaurentPoly(n));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(subsets.size()); ++i) {
      const auto u = static_cast<std::size_t>(i);
      weights[u] = path_weight(t, c, psi(t, c, subsets[u]));
    }
  } else {
    for (std::size_t i = 0; i < subsets.size(); ++i) weights[i] = path_weight(t, c, psi(t, c, subsets[i]));
  }
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    r.polynomial += weights[i];
    r.mu_table[dimension_vector(w, subsets[i], n)] += 1;
  }
  r.path_count = subsets.size();
  return r;
}

LaurentPoly assemble_from_mu(const MuTable& mu, const IntVector& index, const IntMatrix& b) {
  const int n = static_cast<int>(index.size());
  LaurentPoly p(n);
  for (const auto& [e, count] : mu) {
    Monomial m(n);
    for (std::size_t i = 0; i < index.size(); ++i) {
      int x = index[i];
      for (std::size_t j = 0; j < e.size(); ++j) x += b.at(i).at(j) * e[j];
      m.x[i] = x;
      m.y[i] = static_cast<std::uint32_t>(e.at(i));
    }
    p.add_term(m, count);
  }
  return p;
}

ExpansionResult expansion_modules(const Triangulation& t, const CurveCrossing& c) {
  const int n = t.internal_count();
  ExpansionResult r{LaurentPoly(n), index_of_curve(t, c), 0, {}, Method::modules};
  const StringWord w = string_of_curve(t, build_qp(t), c);
  r.mu_table = mu_counts(w, n);
  r.polynomial = assemble_from_mu(r.mu_table, r.index, exchange_of(t));
  r.path_count = mu_total(r.mu_table);
  return r;
}

LaurentPoly schiffler_thomas(const Triangulation& t, const CurveCrossing& c) {
  return specialize(expansion_modules(t, c).polynomial, false, true);
}

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  os << (ok() ? "OK" : "FAILED") << '\n';
  return os.str();
}

VerifyReport check_results(const Triangulation& t, const CurveCrossing& c, const ExpansionResult& by_paths,
                           const ExpansionResult& by_modules) {
  (void)c;
  VerifyReport rep;
  const bool same = by_paths.polynomial == by_modules.polynomial;
  rep.checks.push_back({"paths_vs_modules", same,
                        same ? "" : by_paths.polynomial.to_string() + " != " + by_modules.polynomial.to_string()});

  const auto deg = degree_of(by_paths.polynomial, exchange_of(t));
  rep.checks.push_back({"homogeneous", deg.has_value(), ""});
  const bool deg_ok = deg && *deg == by_paths.index && by_paths.index == by_modules.index;
  rep.checks.push_back({"degree_equals_index", deg_ok,
                        deg ? "degree " + format_vector(*deg) + ", index " + format_vector(by_paths.index)
                            : "index " + format_vector(by_paths.index)});

  const Integer sum = mu_total(by_modules.mu_table);
  const bool count_ok = by_paths.path_count == sum && by_paths.mu_table == by_modules.mu_table;
  rep.checks.push_back({"path_count_equals_mu_sum", count_ok,
                        "paths " + by_paths.path_count.str() + ", mu sum " + sum.str()});
  return rep;
}

VerifyReport verify_curve(const Triangulation& t, const CurveCrossing& c, bool with_oracle, int max_depth) {
  VerifyReport rep;
  try {
    const ExpansionResult p = expansion_paths(t, c);
    const ExpansionResult m = expansion_modules(t, c);
    rep = check_results(t, c, p, m);

    bool round_trip = true;
    std::string detail;
    if (!c.is_arc()) {
      const StringWord w = string_of_curve(t, build_qp(t), c);
      for (const PositionSubset& s : closed_subsets(w)) {
        const CompletePath path = psi(t, c, s);
        if (phi(t, c, path) != s || psi(t, c, phi(t, c, path.arcs)) != path) {
          round_trip = false;
          detail = "fails at " + render_subset(s);
          break;
        }
      }
    }
    rep.checks.push_back({"phi_psi_roundtrip", round_trip, detail});

    if (with_oracle) {
      const OracleResult o = cluster_variable_by_flips(t, c, max_depth);
      if (!o.found) {
        rep.checks.push_back({"oracle", false, "arc not reached within " + std::to_string(max_depth) + " flips"});
      } else {
        const bool eq = *o.variable == p.polynomial;
        rep.checks.push_back({"oracle", eq,
                              "depth " + std::to_string(o.depth) + (eq ? "" : ", got " + o.variable->to_string())});
      }
    }
  } catch (const Error& e) {
    rep.checks.push_back({"error", false, e.code() + ": " + e.what()});
  }
  return rep;
}

}  // namespace clustexp
