#pragma once

#include <vector>

#include "lisgf/high_precision.hpp"
#include "lisgf/polynomial.hpp"
#include "lisgf/rational_gf.hpp"

namespace lisgf {

/// Closed interval [lo, hi] with exact rational endpoints.
struct RealInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  HighFloat midpoint() const { return to_high((lo + hi) / 2); }
  bool contains(const HighFloat& v) const { return to_high(lo) <= v && v <= to_high(hi); }
};

/// Number of distinct real roots of p in (a, b], by Sturm's theorem.
int count_roots(const UPoly& p, const Rational& a, const Rational& b);

/// p / gcd(p, p').
UPoly squarefree_part(const UPoly& p);

/// Isolate the smallest positive real root of p to an interval of width
/// below `width`, by exact bisection. Throws NoDominantSingularity when p has
/// no positive root.
RealInterval smallest_positive_root(const UPoly& p, const Rational& width);

/// Isolate the unique root of p in [lo, hi] (p must change sign there).
RealInterval refine_root(const UPoly& p, Rational lo, Rational hi, const Rational& width);

/// Interval of width < 1e-20 around 1/rho, rho the smallest positive pole of g.
RealInterval growth_rate(const UnivariateRGF& g);

/// Leading behaviour [x^n] g ~ constant * n^(multiplicity-1) * rho^(-n) coming
/// from the smallest positive pole rho.
struct DominantTerm {
  HighFloat rho;
  int multiplicity = 0;
  HighFloat constant;
};
DominantTerm dominant_term(const UnivariateRGF& g);

/// E(L_n) ~ coefficient * n^power, read off from F(x,1) and dF/dq(x,1).
struct ExpectationLaw {
  int power = 0;
  HighFloat coefficient;
};
ExpectationLaw expectation_law(const RationalGF& f);

/// Limit of E(L_n)/n for the decreasing pattern m...1, m >= 2.
HighFloat slope_decreasing(int m);

/// Limit of E(L_n)/n for the hat pattern (m-1)m(m-2)...1, m >= 4, using the
/// numerator U_2(c) + sum_{j=2}^{m-1} U_j(c)^2 that matches the exact
/// derivative of the generating function.
HighFloat slope_hat(int m);

/// The hat-family slope with the U_j^2 sum starting at j = 1 instead.
HighFloat slope_hat_sum_from_one(int m);

/// [x^n] dF/dq(x,1) ~ alpha n g^n and [x^n] F(x,1) ~ alpha_tilde g^n for the
/// decreasing pattern, g = 4 cos^2(pi/(m+1)).
struct AlphaConstants {
  HighFloat alpha;
  HighFloat alpha_tilde;
};
AlphaConstants alpha_constants(int m);

/// [x^n] F_{12...m}(x,1) ~ lead_coefficient * n^exponent, E(L_n) -> expected_limit,
/// m >= 3.
struct IncreasingAsymptotics {
  Rational lead_coefficient;  // c_{m-2} / (2m-4)!
  int exponent = 0;           // 2m - 4
  int expected_limit = 0;     // m - 1
};
IncreasingAsymptotics increasing_asymptotics(int m);

/// Real root a ~ 2.465571 of a^3 - 4a^2 + 5a - 3, isolated to width 1e-20.
RealInterval table_cubic_root();

/// (-5a^2 + 22a - 9) / 31 at that root.
HighFloat table_cubic_slope();

}  // namespace lisgf
