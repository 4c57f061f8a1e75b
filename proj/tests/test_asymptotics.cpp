#include "doctest.h"
#include "lisgf/asymptotics.hpp"
#include "lisgf/cheb.hpp"
#include "lisgf/errors.hpp"
#include "lisgf/gf_engine.hpp"

using namespace lisgf;
using boost::multiprecision::abs;
using boost::multiprecision::cos;
using boost::multiprecision::sqrt;

namespace {

const UPoly ux = UPoly::monomial(1, 1);
const UPoly u1 = UPoly::constant(1);

bool close(const HighFloat& a, const HighFloat& b, const char* tol) {
  return abs(a - b) <= HighFloat(tol) * std::max(HighFloat(1), abs(b));
}

}  // namespace

TEST_CASE("Sturm counting and squarefree part") {
  const UPoly p = (ux - UPoly::constant(1)) * (ux - UPoly::constant(2)) * (ux - UPoly::constant(2));
  CHECK(count_roots(p, Rational(0), Rational(3)) == 2);
  CHECK(count_roots(p, Rational(3, 2), Rational(3)) == 1);
  CHECK(squarefree_part(p).degree() == 2);
  const RealInterval iv = smallest_positive_root(p, Rational(1, 1000));
  CHECK(iv.lo <= 1);
  CHECK(iv.hi >= 1);
  CHECK_THROWS_AS(smallest_positive_root(u1 + ux, Rational(1, 10)), NoDominantSingularity);
  CHECK_THROWS_AS(smallest_positive_root(u1, Rational(1, 10)), NoDominantSingularity);
}

TEST_CASE("growth rates") {
  const RealInterval g3 = growth_rate(at_q1(f_decreasing(3)));
  CHECK(g3.contains(HighFloat(2)));
  CHECK(g3.width() < Rational(1, 100000) * Rational(1, 100000) * Rational(1, 100000) * Rational(1, 100000));
  const RealInterval g4 = growth_rate(at_q1(f_decreasing(4)));
  const HighFloat c = cos(pi_hf() / 5);
  CHECK(g4.contains(4 * c * c));
  CHECK(close(g4.midpoint(), (3 + sqrt(HighFloat(5))) / 2, "1e-19"));
  CHECK(growth_rate(UnivariateRGF(u1, u1 - ux)).contains(HighFloat(1)));
  for (int m = 2; m <= 10; ++m) {
    const HighFloat cm = cos(pi_hf() / (m + 1));
    CHECK(close(growth_rate(at_q1(f_decreasing(m))).midpoint(), 4 * cm * cm, "1e-19"));
  }
}

TEST_CASE("dominant terms") {
  // 1/(1-2x)^2 = sum (n+1) 2^n x^n.
  const DominantTerm d = dominant_term(UnivariateRGF(u1, (u1 - 2 * ux) * (u1 - 2 * ux)));
  CHECK(d.multiplicity == 2);
  CHECK(close(d.rho, HighFloat(1) / 2, "1e-40"));
  CHECK(close(d.constant, HighFloat(1), "1e-30"));
  // x/(1-x)^3 = sum n(n+1)/2 x^n.
  const DominantTerm e = dominant_term(UnivariateRGF(ux, (u1 - ux) * (u1 - ux) * (u1 - ux)));
  CHECK(e.multiplicity == 3);
  CHECK(close(e.constant, HighFloat(1) / 2, "1e-30"));
}

TEST_CASE("slopes of the decreasing family") {
  CHECK(close(slope_decreasing(2), HighFloat(1), "1e-30"));
  CHECK(close(slope_decreasing(3), HighFloat(3) / 4, "1e-30"));
  CHECK(close(slope_decreasing(4), 2 - 3 / sqrt(HighFloat(5)), "1e-30"));
  for (int m = 2; m <= 9; ++m) {
    const ExpectationLaw law = expectation_law(f_tau(Permutation::decreasing(m)));
    CHECK(law.power == 1);
    CHECK(close(law.coefficient, slope_decreasing(m), "1e-28"));
    const AlphaConstants a = alpha_constants(m);
    CHECK(close(a.alpha / a.alpha_tilde, slope_decreasing(m), "1e-25"));
  }
  // E(L_n) = n exactly for 21.
  const StatSeries s = stats(Permutation{2, 1}, 30, StatsOptions{false});
  for (int n = 1; n <= 30; ++n) CHECK(*s.rows[n].mean == n);
}

TEST_CASE("alpha constants match the dominant terms of the series") {
  for (int m = 3; m <= 7; ++m) {
    const RationalGF F = f_decreasing(m);
    const AlphaConstants a = alpha_constants(m);
    const DominantTerm count = dominant_term(at_q1(F));
    const DominantTerm first = dominant_term(d_dq_at_q1(F));
    CHECK(count.multiplicity == 1);
    CHECK(first.multiplicity == 2);
    CHECK(close(count.constant, a.alpha_tilde, "1e-25"));
    CHECK(close(first.constant, a.alpha, "1e-25"));
  }
}

TEST_CASE("slopes of the hat family") {
  for (int m = 4; m <= 8; ++m) {
    const ExpectationLaw law = expectation_law(f_tau(hat_pattern(m)));
    CHECK(law.power == 1);
    CHECK(close(law.coefficient, slope_hat(m), "1e-28"));
    CHECK_FALSE(close(law.coefficient, slope_hat_sum_from_one(m), "1e-3"));
  }
  CHECK(close(slope_hat(4), 1 - 1 / sqrt(HighFloat(5)), "1e-30"));
  CHECK_THROWS_AS(slope_hat(3), InvalidInput);
}

TEST_CASE("increasing family") {
  const IncreasingAsymptotics a4 = increasing_asymptotics(4);
  CHECK(a4.lead_coefficient == Rational(1, 12));
  CHECK(a4.exponent == 4);
  CHECK(a4.expected_limit == 3);
  CHECK(increasing_asymptotics(3).lead_coefficient == Rational(1, 2));
  CHECK_THROWS_AS(increasing_asymptotics(2), InvalidInput);
  for (int m = 3; m <= 6; ++m) {
    const ExpectationLaw law = expectation_law(f_tau(Permutation::identity(m)));
    CHECK(law.power == 0);
    CHECK(close(law.coefficient, HighFloat(m - 1), "1e-28"));
    const DominantTerm d = dominant_term(at_q1(f_tau(Permutation::identity(m))));
    CHECK(d.multiplicity - 1 == 2 * m - 4);
    CHECK(close(d.constant, to_high(increasing_asymptotics(m).lead_coefficient), "1e-28"));
  }
}

TEST_CASE("cubic root of the S4 table") {
  const RealInterval a = table_cubic_root();
  CHECK(a.width() < Rational(1, 100000) * Rational(1, 100000) * Rational(1, 100000) * Rational(1, 100000));
  // Reference value from an independent 40-digit root finder.
  CHECK(abs(a.midpoint() - HighFloat("2.465571231876768026656731225219939108")) < HighFloat("1e-20"));
  CHECK(abs(table_cubic_slope() - HighFloat("0.478947083999912243540312899289817")) < HighFloat("1e-30"));
  CHECK(close(expectation_law(f_tau(Permutation{2, 3, 4, 1})).coefficient, table_cubic_slope(), "1e-28"));
}
