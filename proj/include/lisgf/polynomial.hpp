#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lisgf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial with rational coefficients. The coefficient
/// vector never has a trailing zero; the zero polynomial is the empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational eval(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const Rational& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c) { return a *= c; }
  friend UPoly operator*(const Rational& c, UPoly a) { return a *= c; }
  bool operator==(const UPoly& other) const { return coeffs_ == other.coeffs_; }

  /// Render with the given variable name, ascending powers: "1 - 3*x + x^2".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DivisionByZero when `divisor` is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& dividend, const UPoly& divisor);

/// Monic greatest common divisor; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

UPoly pow(const UPoly& base, unsigned exponent);

/// Exponent pair x^x_deg q^q_deg.
struct Monomial {
  int x_deg = 0;
  int q_deg = 0;

  int total() const { return x_deg + q_deg; }
  bool operator==(const Monomial&) const = default;
};

/// Graded order: lower total degree first; within a degree, higher x-degree
/// first. This is both the storage order and the printing order.
struct GradedOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x_deg > b.x_deg;
  }
};

/// Sparse polynomial in x and q over the rationals. Zero coefficients are
/// never stored; the zero polynomial has no terms.
class BPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedOrder>;

  BPoly() = default;
  BPoly(const Rational& c);  // NOLINT: constants convert implicitly
  BPoly(int c) : BPoly(Rational(c)) {}  // NOLINT

  static BPoly x();
  static BPoly q();
  static BPoly monomial(const Rational& c, int x_deg, int q_deg);
  /// Lift a univariate polynomial in x (or in q when in_q is set).
  static BPoly from_upoly(const UPoly& p, bool in_q = false);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(int x_deg, int q_deg) const;
  Rational constant_term() const { return coeff(0, 0); }
  int degree_x() const;
  int degree_q() const;

  Rational eval(const Rational& x0, const Rational& q0) const;
  /// Substitute q := q0, yielding a polynomial in x.
  UPoly at_q(const Rational& q0) const;
  BPoly d_dq() const;

  /// Greatest common divisor of all coefficients made positive, so that
  /// dividing by it leaves integer coefficients with gcd 1.
  Rational content() const;

  BPoly operator-() const;
  BPoly& operator+=(const BPoly& other);
  BPoly& operator-=(const BPoly& other);
  BPoly& operator*=(const Rational& c);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend BPoly operator*(BPoly a, const Rational& c) { return a *= c; }
  friend BPoly operator*(const Rational& c, BPoly a) { return a *= c; }
  bool operator==(const BPoly& other) const { return terms_ == other.terms_; }

  /// "1 - 2*x*q - x^2*q + x^2*q^2"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

BPoly pow(const BPoly& base, unsigned exponent);

/// a / b when b divides a exactly in Q[x,q], otherwise nullopt.
std::optional<BPoly> divide_exact(const BPoly& a, const BPoly& b);

/// A greatest common divisor in Q[x,q], normalized to integer coefficients
/// with content 1 and positive leading coefficient (in x-major order).
/// gcd(0, b) is the normalized b.
BPoly gcd(const BPoly& a, const BPoly& b);

}  // namespace lisgf
