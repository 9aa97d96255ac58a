#include "clustexp/cluster.hpp"
#include "clustexp/error.hpp"
#include "clustexp/expansion.hpp"
#include "clustexp/quiver.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace clustexp;

namespace {

const IntMatrix annulus_b{{0, -1, 2}, {1, 0, -1}, {-2, 1, 0}};

ExtendedMatrix random_extended(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  IntMatrix rows(static_cast<std::size_t>(2 * n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int v = entry(rng);
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -v;
    }
  for (int i = n; i < 2 * n; ++i)
    for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(rng);
  return ExtendedMatrix{rows};
}

// The textbook rule written independently: b'_ij = b_ij + sgn(b_ik)[b_ik b_kj]_+.
ExtendedMatrix mutate_oracle(const ExtendedMatrix& m, int k) {
  ExtendedMatrix r = m;
  const auto kk = static_cast<std::size_t>(k - 1);
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.rows[i].size(); ++j) {
      if (i == kk || j == kk) {
        r.rows[i][j] = -m.rows[i][j];
        continue;
      }
      const int bik = m.rows[i][kk], bkj = m.rows[kk][j];
      const int sgn = (bik > 0) - (bik < 0);
      r.rows[i][j] = m.rows[i][j] + sgn * std::max(bik * bkj, 0);
    }
  return r;
}

std::size_t catalan(int m) {
  std::size_t c = 1;
  for (int i = 0; i < m; ++i) c = c * static_cast<std::size_t>(2 * (2 * i + 1)) / static_cast<std::size_t>(i + 2);
  return c;
}

}  // namespace

TEST_CASE("matrix mutation on the annulus") {
  const ExtendedMatrix m = principal(annulus_b);
  for (int k = 1; k <= 3; ++k) CHECK(mutate_matrix(mutate_matrix(m, k), k) == m);
  const ExtendedMatrix m1 = mutate_matrix(m, 1);
  CHECK(m1.rows[1][2] == 1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(m1.rows[i][0] == -m.rows[i][0]);
  for (std::size_t j = 0; j < 3; ++j) CHECK(m1.rows[0][j] == -m.rows[0][j]);
  CHECK_THROWS_AS(mutate_matrix(m, 0), Error);
  CHECK_THROWS_AS(mutate_matrix(m, 4), Error);
}

TEST_CASE("matrix mutation agrees with the textbook rule") {
  std::mt19937 rng(21);
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const ExtendedMatrix m = random_extended(rng, n);
    const int k = std::uniform_int_distribution<int>(1, n)(rng);
    const ExtendedMatrix r = mutate_matrix(m, k);
    CHECK(r == mutate_oracle(m, k));
    CHECK(mutate_matrix(r, k) == m);
    const IntMatrix top = r.exchange();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(top[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == -top[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
  }
}

TEST_CASE("one mutation in polygon(4)") {
  const Seed s = initial_seed(polygon(4));
  CHECK(s.matrix.rows == IntMatrix{{0}, {1}});
  const Seed m = mutate_seed(s, 1);
  CHECK(m.cluster[0] == LaurentPoly::parse("x1^-1 + x1^-1*y1", 1));
  CHECK(m.cluster[0].term_count() == 2);
  CHECK(mutate_seed(m, 1) == s);
}

TEST_CASE("seed mutation is an involution on polygon(6) to depth 4") {
  std::mt19937 rng(31);
  const Seed s0 = initial_seed(polygon(6));
  for (int round = 0; round < 25; ++round) {
    Seed s = s0;
    const int depth = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int i = 0; i < depth; ++i) s = mutate_seed(s, std::uniform_int_distribution<int>(1, 3)(rng));
    for (int k = 1; k <= 3; ++k) CHECK(mutate_seed(mutate_seed(s, k), k) == s);
  }
}

TEST_CASE("flip_sync keeps labels and restores the seed") {
  const Triangulation t = support::fixture("octagon.srf").triangulation;
  const Seed s = initial_seed(t);
  CHECK(s.labels == std::vector<std::string>{"t1", "t2", "t3", "t4", "t5"});
  for (int k = 1; k <= 5; ++k) {
    const SyncedSeed a = flip_sync(t, s, k);
    CHECK(a.seed.labels.size() == 5);
    CHECK(signed_adjacency(build_qp(a.triangulation)) == a.seed.matrix.exchange());
    const SyncedSeed b = flip_sync(a.triangulation, a.seed, k);
    CHECK(b.seed == s);
    CHECK(b.triangulation.canonical_key() == t.canonical_key());
  }
  CHECK_THROWS_AS(flip_sync(t, s, 6), Error);
}

TEST_CASE("y-hat") {
  CHECK(y_hat(principal(annulus_b))[0] == LaurentPoly::parse("x2*x3^-2*y1", 3));
  const auto zero = y_hat(principal(IntMatrix{{0, 0}, {0, 0}}));
  CHECK(zero[0] == LaurentPoly::y(2, 1));
  CHECK(zero[1] == LaurentPoly::y(2, 2));
  const auto ys = y_hat(principal(annulus_b));
  for (int j = 0; j < 3; ++j) {
    Monomial top(3);
    for (int i = 0; i < 3; ++i) top.x[static_cast<std::size_t>(i)] = annulus_b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    CHECK(ys[static_cast<std::size_t>(j)] == LaurentPoly::monomial(1, top) * LaurentPoly::y(3, j + 1));
  }
}

TEST_CASE("F-polynomial and g-vector of initial variables") {
  for (int i = 1; i <= 3; ++i) {
    CHECK(f_polynomial(LaurentPoly::x(3, i)) == LaurentPoly::constant(3, 1));
    IntVector e(3, 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    CHECK(g_vector(LaurentPoly::x(3, i), annulus_b) == e);
  }
  try {
    g_vector(LaurentPoly::parse("x1 + x2", 3), annulus_b);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "cluster.not_homogeneous");
  }
}

TEST_CASE("oracle on the octagon curve") {
  const auto doc = support::fixture("octagon.srf");
  const Triangulation& t = doc.triangulation;
  const CurveCrossing& c = doc.find_curve("gamma")->curve;
  const OracleResult r = cluster_variable_by_flips(t, c, default_max_depth(t));
  REQUIRE(r.found);
  CHECK(r.depth == 3);
  // Denominator exponents equal crossing numbers: x2 x3 x5 once each.
  const LaurentPoly numer = *r.variable * LaurentPoly::parse("x2*x3*x5", 5);
  for (const auto& [m, coef] : numer.terms()) {
    for (int e : m.x) CHECK(e >= 0);
    CHECK(coef > 0);
  }
  bool x2_free = false, x3_free = false, x5_free = false;
  for (const auto& [m, coef] : numer.terms()) {
    x2_free = x2_free || m.x[1] == 0;
    x3_free = x3_free || m.x[2] == 0;
    x5_free = x5_free || m.x[4] == 0;
  }
  CHECK((x2_free && x3_free && x5_free));
  const OracleResult par = cluster_variable_by_flips(t, c, default_max_depth(t), Exec::parallel);
  CHECK(par.flips == r.flips);
  CHECK(*par.variable == *r.variable);
}

TEST_CASE("oracle edge cases") {
  const auto doc = support::fixture("octagon.srf");
  const Triangulation& t = doc.triangulation;
  const OracleResult arc = cluster_variable_by_flips(t, arc_curve(t, support::arc_id(t, "t2")), 0);
  CHECK(arc.found);
  CHECK(arc.depth == 0);
  CHECK(*arc.variable == LaurentPoly::x(5, 2));
  const OracleResult none = cluster_variable_by_flips(t, doc.find_curve("gamma")->curve, 0);
  CHECK_FALSE(none.found);
  CHECK_FALSE(none.variable.has_value());
  CHECK(default_max_depth(t) == 50);
}

TEST_CASE("polygon(6) seed two flips away matches the oracle") {
  const Triangulation t = polygon(6);
  SyncedSeed s{t, initial_seed(t)};
  s = flip_sync(s.triangulation, s.seed, 1);
  s = flip_sync(s.triangulation, s.seed, 3);
  for (int k = 1; k <= 3; ++k) {
    // Transport arc k of the final triangulation back through both flips.
    CurveCrossing c = arc_curve(s.triangulation, s.triangulation.internal_arc(k));
    Triangulation cur = s.triangulation;
    for (int f : {3, 1}) {
      c = transport_through_flip(cur, c, cur.internal_arc(f));
      cur = flip(cur, cur.internal_arc(f));
    }
    CHECK(cur.canonical_key() == t.canonical_key());
    c = relocate(cur, c, t);
    const OracleResult r = cluster_variable_by_flips(t, c, default_max_depth(t));
    REQUIRE(r.found);
    CHECK(*r.variable == s.seed.cluster[static_cast<std::size_t>(k - 1)]);
    if (!c.is_arc()) CHECK(*r.variable == expansion_modules(t, c).polynomial);
  }
}

TEST_CASE("exchange graphs of small polygons") {
  for (int c = 4; c <= 7; ++c) {
    const Triangulation t = polygon(c);
    const ExchangeGraph g = explore_exchange_graph(t, default_max_depth(t) + 2);
    CHECK(g.complete);
    CHECK(g.triangulations == catalan(c - 2));
    CHECK(g.variables.size() == static_cast<std::size_t>(c * (c - 3) / 2));
    for (const auto& [key, av] : g.variables) {
      CHECK(f_polynomial(av.variable).coefficient(Monomial(c - 3)) == 1);
      CHECK(av.variable == expansion_modules(t, av.curve).polynomial);
    }
    const ExchangeGraph gp = explore_exchange_graph(t, default_max_depth(t) + 2, Exec::parallel);
    CHECK(gp.triangulations == g.triangulations);
    CHECK(gp.variables.size() == g.variables.size());
  }
}

TEST_CASE("render_seed") {
  const std::string text = render_seed(initial_seed(polygon(4)));
  CHECK(text == "x1 [t1] = x1\nmatrix\n0\n1\n");
}
