#pragma once

#include <string>
#include <vector>

#include "lisgf/polynomial.hpp"

namespace lisgf {

/// A rational function N(x,q)/D(x,q) with a power series at the origin.
///
/// Canonical form: N and D share no nonconstant factor (full bivariate gcd
/// is cancelled) and D(0,0) = 1. With that normalization two fractions are
/// equal exactly when their numerators and denominators are identical, which
/// makes the text rendering a reproducible fingerprint.
class RationalGF {
 public:
  RationalGF() : num_(0), den_(1) {}
  RationalGF(const BPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalGF(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalGF(int c) : num_(c), den_(1) {}  // NOLINT

  /// Throws DivisionByZero when den is zero and NotSeriesExpandable when the
  /// reduced denominator vanishes at the origin.
  RationalGF(const BPoly& num, const BPoly& den);

  static RationalGF x() { return RationalGF(BPoly::x()); }
  static RationalGF q() { return RationalGF(BPoly::q()); }

  const BPoly& num() const { return num_; }
  const BPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalGF operator-() const;
  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator/(const RationalGF& a, const RationalGF& b);
  RationalGF& operator+=(const RationalGF& b) { return *this = *this + b; }
  RationalGF& operator-=(const RationalGF& b) { return *this = *this - b; }
  RationalGF& operator*=(const RationalGF& b) { return *this = *this * b; }

  /// Structural equality of canonical forms.
  bool operator==(const RationalGF& other) const = default;

  /// "(1 - x) / (1 - x - x*q)"; a bare polynomial when the denominator is 1.
  std::string to_string() const;

 private:
  struct Raw {};
  RationalGF(Raw, BPoly num, BPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalGF make(BPoly num, BPoly den);

  BPoly num_;
  BPoly den_;
};

/// Equality decided by cross-multiplication, num_a*den_b == num_b*den_a,
/// independent of canonicalization.
bool equivalent(const RationalGF& a, const RationalGF& b);

/// Exact value at (x0, q0). Throws PoleError if the denominator vanishes there.
Rational eval(const RationalGF& f, const Rational& x0, const Rational& q0);

/// Coefficient table a[n][k] = [x^n q^k] F for 0 <= n, k <= N.
using SeriesTable = std::vector<std::vector<Rational>>;
SeriesTable series(const RationalGF& f, int order);

/// Univariate rational function in x, reduced, with den(0) = 1.
class UnivariateRGF {
 public:
  UnivariateRGF() : num_(), den_(UPoly::constant(1)) {}
  UnivariateRGF(const UPoly& num, const UPoly& den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  friend UnivariateRGF operator+(const UnivariateRGF& a, const UnivariateRGF& b);
  friend UnivariateRGF operator*(const UnivariateRGF& a, const UnivariateRGF& b);

  bool operator==(const UnivariateRGF& other) const = default;
  std::string to_string() const;

 private:
  UPoly num_;
  UPoly den_;
};

bool equivalent(const UnivariateRGF& a, const UnivariateRGF& b);

/// F(x, 1).
UnivariateRGF at_q1(const RationalGF& f);
/// dF/dq evaluated at q = 1.
UnivariateRGF d_dq_at_q1(const RationalGF& f);
/// d^2F/dq^2 evaluated at q = 1.
UnivariateRGF d2_dq2_at_q1(const RationalGF& f);

/// c_0..c_N with c_n = [x^n] G, via the linear recurrence sum_i d_i c_{n-i} = p_n.
std::vector<Rational> coeffs_by_recurrence(const UnivariateRGF& g, int order);

/// Same coefficients by truncated power-series division, kept independent of
/// coeffs_by_recurrence for cross-checking.
std::vector<Rational> series_by_division(const UnivariateRGF& g, int order);

}  // namespace lisgf
