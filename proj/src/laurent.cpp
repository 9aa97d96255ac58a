#include "clustexp/laurent.hpp"

#include "clustexp/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace clustexp {

Monomial::Monomial(std::vector<int> xs, std::vector<std::uint32_t> ys) : x(std::move(xs)), y(std::move(ys)) {
  if (x.size() != y.size()) throw Error("laurent.size_mismatch", "x and y exponent vectors differ in length");
}

bool Monomial::is_one() const {
  return std::all_of(x.begin(), x.end(), [](int e) { return e == 0; }) &&
         std::all_of(y.begin(), y.end(), [](std::uint32_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw Error("laurent.size_mismatch", "monomials over different variable sets");
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    m.x[i] = a.x[i] + b.x[i];
    m.y[i] = a.y[i] + b.y[i];
  }
  return m;
}

LaurentPoly LaurentPoly::constant(int n, const Integer& c) {
  LaurentPoly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Integer& coef, Monomial m) {
  LaurentPoly p(m.size());
  p.add_term(m, coef);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Integer& coef, std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw Error("laurent.size_mismatch", "x and y exponent vectors differ in length");
  Monomial m(static_cast<int>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] < 0) throw Error("laurent.negative_y", "y exponents must be non-negative");
    m.x[i] = x[i];
    m.y[i] = static_cast<std::uint32_t>(y[i]);
  }
  return monomial(coef, std::move(m));
}

LaurentPoly LaurentPoly::x(int n, int i) {
  Monomial m(n);
  m.x.at(static_cast<std::size_t>(i - 1)) = 1;
  return monomial(1, std::move(m));
}

LaurentPoly LaurentPoly::y(int n, int i) {
  Monomial m(n);
  m.y.at(static_cast<std::size_t>(i - 1)) = 1;
  return monomial(1, std::move(m));
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (m.size() != n_) throw Error("laurent.size_mismatch", "monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_size(const LaurentPoly& o) const {
  if (o.n_ != n_) throw Error("laurent.size_mismatch", "polynomials over different variable sets");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_size(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_size(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(n_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_size(b);
  LaurentPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (mag != 1 || m.is_one()) factors.push_back(mag.str());
    auto power = [&](char v, std::size_t i, long long e) {
      if (e == 0) return;
      std::string f = v + std::to_string(i + 1);
      if (e != 1) f += "^" + std::to_string(e);
      factors.push_back(std::move(f));
    };
    for (std::size_t i = 0; i < m.x.size(); ++i) power('x', i, m.x[i]);
    for (std::size_t i = 0; i < m.y.size(); ++i) power('y', i, m.y[i]);
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view s, int n) : s_(s), n_(n) {}

  LaurentPoly run() {
    LaurentPoly p(n_);
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, mono] = term();
      p.add_term(mono, negative ? Integer(-coef) : coef);
      skip();
    }
    return p;
  }

 private:
  std::pair<Integer, Monomial> term() {
    Integer coef = 1;
    Monomial m(n_);
    for (;;) {
      skip();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= Integer(digits());
      } else if (c == 'x' || c == 'y') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a variable index");
        const long long i = small_int();
        if (i < 1 || i > n_) fail("variable index out of range");
        long long e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          bool neg = false;
          if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
          }
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
          e = small_int();
          if (neg) e = -e;
        }
        const auto idx = static_cast<std::size_t>(i - 1);
        if (c == 'x') {
          m.x[idx] += static_cast<int>(e);
        } else {
          if (e < 0) fail("negative y exponent");
          m.y[idx] += static_cast<std::uint32_t>(e);
        }
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {coef, m};
  }

  long long small_int() {
    const std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return std::stoll(d);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("laurent.parse", "column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, int n) {
  if (text == "0") return LaurentPoly(n);
  return PolyParser(text, n).run();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

namespace {

struct DegreeBox {
  std::vector<long long> lo, hi;  // x exponents then y exponents
};

DegreeBox degree_box(const LaurentPoly& p) {
  const auto n = static_cast<std::size_t>(p.nvars());
  DegreeBox box{std::vector<long long>(2 * n, std::numeric_limits<long long>::max()),
                std::vector<long long>(2 * n, std::numeric_limits<long long>::min())};
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      box.lo[i] = std::min<long long>(box.lo[i], m.x[i]);
      box.hi[i] = std::max<long long>(box.hi[i], m.x[i]);
      box.lo[n + i] = std::min<long long>(box.lo[n + i], m.y[i]);
      box.hi[n + i] = std::max<long long>(box.hi[n + i], m.y[i]);
    }
  }
  return box;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars() != q.nvars()) throw Error("laurent.size_mismatch", "polynomials over different variable sets");
  if (q.is_zero()) throw Error("laurent.division_by_zero", "division by the zero polynomial");
  const int n = p.nvars();
  LaurentPoly quotient(n);
  if (p.is_zero()) return quotient;

  // Every term of an exact quotient lies in this box.
  const DegreeBox bp = degree_box(p), bq = degree_box(q);
  std::vector<long long> lo(bp.lo.size()), hi(bp.lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = bp.lo[i] - bq.lo[i];
    hi[i] = bp.hi[i] - bq.hi[i];
  }
  auto inexact = [&] {
    return Error("laurent.inexact_division", "(" + p.to_string() + ") / (" + q.to_string() + ") is not exact");
  };

  const auto& [lq, lc] = *q.terms().rbegin();
  LaurentPoly rem = p;
  const auto un = static_cast<std::size_t>(n);
  while (!rem.is_zero()) {
    const auto& [lr, rc] = *rem.terms().rbegin();
    if (rc % lc != 0) throw inexact();
    Monomial m(n);
    for (std::size_t i = 0; i < un; ++i) {
      const long long ex = static_cast<long long>(lr.x[i]) - lq.x[i];
      const long long ey = static_cast<long long>(lr.y[i]) - static_cast<long long>(lq.y[i]);
      if (ex < lo[i] || ex > hi[i] || ey < lo[un + i] || ey > hi[un + i] || ey < 0) throw inexact();
      m.x[i] = static_cast<int>(ex);
      m.y[i] = static_cast<std::uint32_t>(ey);
    }
    const LaurentPoly step = LaurentPoly::monomial(Integer(rc / lc), m);
    rem -= step * q;
    quotient += step;
  }
  return quotient;
}

LaurentPoly specialize(const LaurentPoly& p, bool set_x_to_one, bool set_y_to_one) {
  LaurentPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Monomial k = m;
    if (set_x_to_one) std::fill(k.x.begin(), k.x.end(), 0);
    if (set_y_to_one) std::fill(k.y.begin(), k.y.end(), 0u);
    r.add_term(k, c);
  }
  return r;
}

IntVector monomial_degree(const Monomial& m, const IntMatrix& b) {
  const auto n = m.x.size();
  IntVector d(m.x.begin(), m.x.end());
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) d[j] -= b.at(j).at(i) * static_cast<int>(m.y[i]);
  return d;
}

std::optional<IntVector> degree_of(const LaurentPoly& p, const IntMatrix& b) {
  std::optional<IntVector> deg;
  for (const auto& [m, c] : p.terms()) {
    IntVector d = monomial_degree(m, b);
    if (!deg) {
      deg = std::move(d);
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

std::string format_vector(std::span<const int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace clustexp
