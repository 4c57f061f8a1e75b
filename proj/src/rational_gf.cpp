#include "lisgf/rational_gf.hpp"

#include <vector>

#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

std::string parenthesize(const BPoly& p) {
  return p.term_count() > 1 ? "(" + p.to_string() + ")" : p.to_string();
}

std::string parenthesize(const UPoly& p) {
  int nonzero = 0;
  for (const auto& c : p.coeffs()) nonzero += sgn(c) != 0;
  return nonzero > 1 ? "(" + p.to_string() + ")" : p.to_string();
}

BPoly must_divide(const BPoly& a, const BPoly& b) {
  auto quotient = divide_exact(a, b);
  if (!quotient) throw std::logic_error("gcd does not divide operand");
  return *std::move(quotient);
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalGF

RationalGF::RationalGF(const BPoly& num, const BPoly& den) : RationalGF(make(num, den)) {}

RationalGF RationalGF::make(BPoly num, BPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return RationalGF();
  const BPoly g = gcd(num, den);
  if (!(g == BPoly(1))) {
    num = must_divide(num, g);
    den = must_divide(den, g);
  }
  const Rational c = den.constant_term();
  if (sgn(c) == 0) {
    throw NotSeriesExpandable("denominator " + den.to_string() + " vanishes at the origin");
  }
  if (c != 1) {
    const Rational inv = 1 / c;
    num *= inv;
    den *= inv;
  }
  return RationalGF(Raw{}, std::move(num), std::move(den));
}

RationalGF RationalGF::operator-() const { return RationalGF(Raw{}, -num_, den_); }

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalGF::make(a.num_ + b.num_, a.den_);
  const BPoly g = gcd(a.den_, b.den_);
  const BPoly a_cof = must_divide(a.den_, g);
  const BPoly b_cof = must_divide(b.den_, g);
  return RationalGF::make(a.num_ * b_cof + b.num_ * a_cof, a_cof * b.den_);
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  if (a.is_zero() || b.is_zero()) return RationalGF();
  if (a.den_ == BPoly(1) && b.den_ == BPoly(1)) {
    return RationalGF(RationalGF::Raw{}, a.num_ * b.num_, BPoly(1));
  }
  return RationalGF::make(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator/(const RationalGF& a, const RationalGF& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RationalGF::make(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalGF::to_string() const {
  if (den_ == BPoly(1)) return num_.to_string();
  return parenthesize(num_) + " / " + parenthesize(den_);
}

bool equivalent(const RationalGF& a, const RationalGF& b) {
  return a.num() * b.den() == b.num() * a.den();
}

Rational eval(const RationalGF& f, const Rational& x0, const Rational& q0) {
  const Rational d = f.den().eval(x0, q0);
  if (sgn(d) == 0) throw PoleError("denominator vanishes at the evaluation point");
  return f.num().eval(x0, q0) / d;
}

SeriesTable series(const RationalGF& f, int order) {
  const int size = order + 1;
  SeriesTable a(size, std::vector<Rational>(size, Rational(0)));
  if (order < 0) return {};
  // Denominator terms other than the constant (which is 1 in canonical form).
  std::vector<std::pair<Monomial, Rational>> tail;
  for (const auto& [m, c] : f.den().terms()) {
    if (m.x_deg == 0 && m.q_deg == 0) continue;
    if (m.x_deg <= order && m.q_deg <= order) tail.emplace_back(m, c);
  }
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      Rational v = f.num().coeff(i, j);
      for (const auto& [m, c] : tail) {
        if (m.x_deg <= i && m.q_deg <= j) v -= c * a[i - m.x_deg][j - m.q_deg];
      }
      a[i][j] = v;
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// UnivariateRGF

UnivariateRGF::UnivariateRGF(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly::constant(1);
    return;
  }
  const UPoly g = gcd(num, den);
  UPoly n = divmod(num, g).first;
  UPoly d = divmod(den, g).first;
  const Rational c = d.coeff(0);
  if (sgn(c) == 0) {
    throw NotSeriesExpandable("denominator " + d.to_string() + " vanishes at the origin");
  }
  const Rational inv = 1 / c;
  num_ = n * inv;
  den_ = d * inv;
}

UnivariateRGF operator+(const UnivariateRGF& a, const UnivariateRGF& b) {
  return UnivariateRGF(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

UnivariateRGF operator*(const UnivariateRGF& a, const UnivariateRGF& b) {
  return UnivariateRGF(a.num() * b.num(), a.den() * b.den());
}

std::string UnivariateRGF::to_string() const {
  if (den_ == UPoly::constant(1)) return num_.to_string();
  return parenthesize(num_) + " / " + parenthesize(den_);
}

bool equivalent(const UnivariateRGF& a, const UnivariateRGF& b) {
  return a.num() * b.den() == b.num() * a.den();
}

namespace {

struct AtOne {
  UPoly n0, n1, n2, d0, d1, d2;
};

AtOne derivatives_at_q1(const RationalGF& f) {
  const Rational one(1);
  const BPoly n1 = f.num().d_dq();
  const BPoly d1 = f.den().d_dq();
  AtOne out{f.num().at_q(one), n1.at_q(one), n1.d_dq().at_q(one),
            f.den().at_q(one), d1.at_q(one), d1.d_dq().at_q(one)};
  if (out.d0.is_zero()) {
    throw DegenerateSubstitution("denominator vanishes identically at q = 1");
  }
  return out;
}

}  // namespace

UnivariateRGF at_q1(const RationalGF& f) {
  const AtOne v = derivatives_at_q1(f);
  return UnivariateRGF(v.n0, v.d0);
}

UnivariateRGF d_dq_at_q1(const RationalGF& f) {
  const AtOne v = derivatives_at_q1(f);
  return UnivariateRGF(v.n1 * v.d0 - v.n0 * v.d1, v.d0 * v.d0);
}

UnivariateRGF d2_dq2_at_q1(const RationalGF& f) {
  // (N/D)'' = ((N''D - ND'')D - 2D'(N'D - ND')) / D^3
  const AtOne v = derivatives_at_q1(f);
  const UPoly first = v.n1 * v.d0 - v.n0 * v.d1;
  const UPoly num = (v.n2 * v.d0 - v.n0 * v.d2) * v.d0 - Rational(2) * (v.d1 * first);
  return UnivariateRGF(num, v.d0 * v.d0 * v.d0);
}

std::vector<Rational> coeffs_by_recurrence(const UnivariateRGF& g, int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  const auto& d = g.den().coeffs();
  for (int n = 0; n <= order; ++n) {
    Rational v = g.num().coeff(n);
    const int reach = std::min<int>(n, static_cast<int>(d.size()) - 1);
    for (int i = 1; i <= reach; ++i) {
      if (sgn(d[i]) != 0) v -= d[i] * c[n - i];
    }
    c[n] = v;
  }
  return c;
}

std::vector<Rational> series_by_division(const UnivariateRGF& g, int order) {
  // Invert the denominator term by term, then convolve with the numerator.
  std::vector<Rational> inv(order + 1, Rational(0));
  const auto& d = g.den().coeffs();
  for (int n = 0; n <= order; ++n) {
    Rational v = n == 0 ? Rational(1) : Rational(0);
    for (int i = 1; i <= n && i < static_cast<int>(d.size()); ++i) v -= d[i] * inv[n - i];
    inv[n] = v;
  }
  std::vector<Rational> out(order + 1, Rational(0));
  const auto& p = g.num().coeffs();
  for (int i = 0; i < static_cast<int>(p.size()) && i <= order; ++i) {
    for (int n = i; n <= order; ++n) out[n] += p[i] * inv[n - i];
  }
  return out;
}

}  // namespace lisgf
