#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clustexp {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// x-exponents range over Z^n, y-exponents over N^n. Ordered by y first, then
// x, both lexicographically.
struct Monomial {
  std::vector<int> x;
  std::vector<std::uint32_t> y;

  Monomial() = default;
  explicit Monomial(int n) : x(static_cast<std::size_t>(n), 0), y(static_cast<std::size_t>(n), 0u) {}
  Monomial(std::vector<int> xs, std::vector<std::uint32_t> ys);

  int size() const { return static_cast<int>(x.size()); }
  bool is_one() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

Monomial operator*(const Monomial& a, const Monomial& b);

// Exact Laurent polynomial in x_1..x_n (integer exponents) and y_1..y_n
// (non-negative exponents) with arbitrary-precision coefficients. No zero
// coefficient is ever stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  explicit LaurentPoly(int n = 0) : n_(n) {}

  static LaurentPoly constant(int n, const Integer& c);
  static LaurentPoly monomial(const Integer& coef, Monomial m);
  static LaurentPoly monomial(const Integer& coef, std::span<const int> x, std::span<const int> y);
  static LaurentPoly x(int n, int i);  // 1-based
  static LaurentPoly y(int n, int i);  // 1-based

  int nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Integer coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Canonical text: terms in canonical order, `coef*x1^a1*...*y1^b1*...`.
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, int n);

 private:
  void check_same_size(const LaurentPoly& o) const;

  int n_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

// R with R * q == p. Throws Error("laurent.inexact_division") otherwise.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

LaurentPoly specialize(const LaurentPoly& p, bool set_x_to_one, bool set_y_to_one);

// Degree of a monomial under deg(x_i) = e_i, deg(y_i) = -B e_i.
IntVector monomial_degree(const Monomial& m, const IntMatrix& b);

// Common degree of all terms, or nullopt when p is not homogeneous (or zero).
std::optional<IntVector> degree_of(const LaurentPoly& p, const IntMatrix& b);

std::string format_vector(std::span<const int> v);

}  // namespace clustexp
