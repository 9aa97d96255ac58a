#include "clustexp/cluster.hpp"

#include "clustexp/quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <set>
#include <sstream>

namespace clustexp {

IntMatrix ExtendedMatrix::exchange() const {
  const auto n = static_cast<std::size_t>(this->n());
  return IntMatrix(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n));
}

ExtendedMatrix principal(const IntMatrix& b) {
  const std::size_t n = b.size();
  ExtendedMatrix m{b};
  for (std::size_t i = 0; i < n; ++i) {
    if (b[i].size() != n) throw Error("cluster.bad_matrix", "exchange matrix must be square");
    std::vector<int> row(n, 0);
    row[i] = 1;
    m.rows.push_back(std::move(row));
  }
  return m;
}

ExtendedMatrix mutate_matrix(const ExtendedMatrix& m, int k) {
  const int n = m.n();
  if (k < 1 || k > n) throw Error("cluster.bad_direction", "mutation direction " + std::to_string(k) + " out of range");
  const auto kk = static_cast<std::size_t>(k - 1);
  ExtendedMatrix r = m;
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      const int bij = m.rows[i][j];
      if (i == kk || j == kk) {
        r.rows[i][j] = -bij;
      } else {
        const int bik = m.rows[i][kk], bkj = m.rows[kk][j];
        r.rows[i][j] = bij + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return r;
}

Seed initial_seed(const IntMatrix& b) {
  Seed s;
  s.matrix = principal(b);
  const int n = static_cast<int>(b.size());
  for (int i = 1; i <= n; ++i) {
    s.cluster.push_back(LaurentPoly::x(n, i));
    s.labels.push_back("x" + std::to_string(i));
  }
  return s;
}

Seed initial_seed(const Triangulation& t) {
  Seed s = initial_seed(signed_adjacency(build_qp(t)));
  for (int i = 1; i <= t.internal_count(); ++i) s.labels[static_cast<std::size_t>(i - 1)] = t.arc(t.internal_arc(i)).label;
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  const int n = s.matrix.n();
  if (k < 1 || k > n) throw Error("cluster.bad_direction", "mutation direction " + std::to_string(k) + " out of range");
  const auto kk = static_cast<std::size_t>(k - 1);
  LaurentPoly plus = LaurentPoly::constant(n, 1), minus = LaurentPoly::constant(n, 1);
  for (std::size_t i = 0; i < s.matrix.rows.size(); ++i) {
    const int b = s.matrix.rows[i][kk];
    if (b == 0) continue;
    const LaurentPoly base = i < static_cast<std::size_t>(n) ? s.cluster[i] : LaurentPoly::y(n, static_cast<int>(i) - n + 1);
    LaurentPoly& side = b > 0 ? plus : minus;
    for (int e = 0; e < std::abs(b); ++e) side *= base;
  }
  Seed r = s;
  r.cluster[kk] = divide_exact(plus + minus, s.cluster[kk]);
  r.matrix = mutate_matrix(s.matrix, k);
  return r;
}

Seed mutate_seed(const Seed& s, const std::vector<int>& sequence) {
  Seed r = s;
  for (int k : sequence) r = mutate_seed(r, k);
  return r;
}

SyncedSeed flip_sync(const Triangulation& t, const Seed& s, int k) {
  if (k < 1 || k > t.internal_count()) throw Error("cluster.bad_direction", "no internal arc " + std::to_string(k));
  return {flip(t, t.internal_arc(k)), mutate_seed(s, k)};
}

std::vector<LaurentPoly> y_hat(const ExtendedMatrix& m) {
  const int n = m.n();
  std::vector<LaurentPoly> out;
  for (int j = 0; j < n; ++j) {
    Monomial mono(n);
    for (int i = 0; i < 2 * n; ++i) {
      const int b = m.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i < n) {
        mono.x[static_cast<std::size_t>(i)] += b;
      } else {
        if (b < 0) throw Error("cluster.negative_coefficient", "y-hat needs non-negative coefficient rows");
        mono.y[static_cast<std::size_t>(i - n)] += static_cast<std::uint32_t>(b);
      }
    }
    out.push_back(LaurentPoly::monomial(1, std::move(mono)));
  }
  return out;
}

LaurentPoly f_polynomial(const LaurentPoly& x) { return specialize(x, true, false); }

IntVector g_vector(const LaurentPoly& x, const IntMatrix& b) {
  auto d = degree_of(x, b);
  if (!d) throw Error("cluster.not_homogeneous", "polynomial is not homogeneous: " + x.to_string());
  return *d;
}

int default_max_depth(const Triangulation& t) { return 2 * t.internal_count() * t.internal_count(); }

namespace {

struct State {
  Triangulation t;
  Seed seed;
  std::vector<int> flips;  // internal indices, 1-based
  std::vector<std::string> arc_keys;  // curve_key in t0 of each internal arc
};

std::string tri_key(std::vector<std::string> keys) {
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) out += "(" + k + ")";
  return out;
}

State root_state(const Triangulation& t0) {
  State root{t0, initial_seed(t0), {}, {}};
  for (int i = 1; i <= t0.internal_count(); ++i)
    root.arc_keys.push_back(curve_key(t0, arc_curve(t0, t0.internal_arc(i))));
  return root;
}

struct Child {
  State state;
  std::string tri_key;
  std::string arc_key;
  CurveCrossing arc_in_t0;
  std::exception_ptr error;
};

// Key, relative to t0, of the arc created by flipping internal arc k of s.t.
std::pair<std::string, CurveCrossing> new_arc_key(const Triangulation& t0, const State& s, const Triangulation& flipped,
                                                  int k) {
  const int arc = s.t.internal_arc(k);
  // The new diagonal lives in flip(s.t); walking back through the previous
  // flips re-expresses it in terms of t0. Each backward flip yields a
  // triangulation isomorphic to the earlier one at label level.
  CurveCrossing c = arc_curve(flipped, arc);
  Triangulation cur = flipped;
  std::vector<int> back{arc};
  for (auto it = s.flips.rbegin(); it != s.flips.rend(); ++it) back.push_back(s.t.internal_arc(*it));
  for (int a : back) {
    c = transport_through_flip(cur, c, a);
    cur = flip(cur, a);
  }
  return {curve_key(cur, c), relocate(cur, c, t0)};
}

Child expand(const Triangulation& t0, const State& s, int k) {
  Child ch;
  try {
    const int arc = s.t.internal_arc(k);
    ch.state.t = flip(s.t, arc);
    ch.state.seed = mutate_seed(s.seed, k);
    ch.state.flips = s.flips;
    ch.state.flips.push_back(k);
    auto [key, curve] = new_arc_key(t0, s, ch.state.t, k);
    ch.state.arc_keys = s.arc_keys;
    ch.state.arc_keys[static_cast<std::size_t>(k - 1)] = key;
    ch.tri_key = tri_key(ch.state.arc_keys);
    ch.arc_key = std::move(key);
    ch.arc_in_t0 = std::move(curve);
  } catch (...) {
    ch.error = std::current_exception();
  }
  return ch;
}

std::vector<Child> expand_frontier(const Triangulation& t0, const std::vector<State>& frontier, int n, Exec exec) {
  const std::size_t total = frontier.size() * static_cast<std::size_t>(n);
  std::vector<Child> children(total);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(total); ++i) {
      const auto u = static_cast<std::size_t>(i);
      children[u] = expand(t0, frontier[u / static_cast<std::size_t>(n)], static_cast<int>(u % static_cast<std::size_t>(n)) + 1);
    }
  } else {
    for (std::size_t i = 0; i < total; ++i)
      children[i] = expand(t0, frontier[i / static_cast<std::size_t>(n)], static_cast<int>(i % static_cast<std::size_t>(n)) + 1);
  }
  for (const Child& c : children)
    if (c.error) std::rethrow_exception(c.error);
  return children;
}

void remember(std::map<std::string, ArcVariable>& memo, const std::string& key, const CurveCrossing& curve,
              const LaurentPoly& v) {
  auto [it, inserted] = memo.try_emplace(key, ArcVariable{curve, v});
  if (!inserted && !(it->second.variable == v))
    throw Error("cluster.inconsistent", "arc " + key + " reached with two different variables");
}

}  // namespace

OracleResult cluster_variable_by_flips(const Triangulation& t0, const CurveCrossing& curve, int max_depth, Exec exec) {
  require_valid(t0);
  OracleResult res;
  const int n = t0.internal_count();
  State root = root_state(t0);
  if (curve.is_arc()) {
    res.found = true;
    res.variable = root.seed.cluster[static_cast<std::size_t>(t0.arc(*curve.arc).index - 1)];
    res.states_visited = 1;
    return res;
  }
  const std::string target = curve_key(t0, curve);
  std::map<std::string, ArcVariable> memo;
  std::set<std::string> seen{tri_key(root.arc_keys)};
  std::vector<State> frontier{root};
  res.states_visited = 1;
  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    const auto children = expand_frontier(t0, frontier, n, exec);
    std::vector<State> next;
    for (std::size_t i = 0; i < children.size(); ++i) {
      const Child& c = children[i];
      const LaurentPoly& v = c.state.seed.cluster[i % static_cast<std::size_t>(n)];
      remember(memo, c.arc_key, c.arc_in_t0, v);
      if (c.arc_key == target) {
        res.found = true;
        res.depth = depth;
        res.flips = c.state.flips;
        res.variable = v;
        res.states_visited = seen.size() + next.size() + 1;
        return res;
      }
      if (seen.insert(c.tri_key).second) next.push_back(c.state);
    }
    res.depth = depth;
    frontier = std::move(next);
    res.states_visited = seen.size();
  }
  return res;
}

ExchangeGraph explore_exchange_graph(const Triangulation& t0, int max_depth, Exec exec) {
  require_valid(t0);
  ExchangeGraph g;
  const int n = t0.internal_count();
  State root = root_state(t0);
  for (int i = 1; i <= n; ++i) {
    const CurveCrossing c = arc_curve(t0, t0.internal_arc(i));
    remember(g.variables, curve_key(t0, c), c, root.seed.cluster[static_cast<std::size_t>(i - 1)]);
  }
  std::set<std::string> seen{tri_key(root.arc_keys)};
  std::vector<State> frontier{root};
  g.complete = n == 0;
  for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
    const auto children = expand_frontier(t0, frontier, n, exec);
    g.mutations += children.size();
    std::vector<State> next;
    for (std::size_t i = 0; i < children.size(); ++i) {
      const Child& c = children[i];
      remember(g.variables, c.arc_key, c.arc_in_t0, c.state.seed.cluster[i % static_cast<std::size_t>(n)]);
      if (seen.insert(c.tri_key).second) next.push_back(c.state);
    }
    frontier = std::move(next);
    g.depth = depth;
    if (frontier.empty()) g.complete = true;
  }
  g.triangulations = seen.size();
  return g;
}

std::string render_seed(const Seed& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.cluster.size(); ++i) {
    os << "x" << i + 1;
    if (i < s.labels.size() && !s.labels[i].empty()) os << " [" << s.labels[i] << "]";
    os << " = " << s.cluster[i].to_string() << '\n';
  }
  os << "matrix\n" << render_matrix(s.matrix.rows);
  return os.str();
}

}  // namespace clustexp
