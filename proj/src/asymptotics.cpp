#include "lisgf/asymptotics.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <map>
#include <stdexcept>

#include "lisgf/cheb.hpp"
#include "lisgf/combinatorics.hpp"
#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

using boost::multiprecision::cos;
using boost::multiprecision::pow;

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<UPoly>& seq, const Rational& t) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.eval(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational cauchy_bound(const UPoly& p) {
  Rational best(0);
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(p.coeff(i) / p.leading());
    if (r > best) best = r;
  }
  return best + 1;
}

const Rational& pow10_neg(int e) {
  static thread_local std::map<int, Rational> cache;
  auto it = cache.find(e);
  if (it == cache.end()) {
    Integer d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, static_cast<unsigned long>(e));
    it = cache.emplace(e, Rational(Integer(1), d)).first;
  }
  return it->second;
}

UPoly nth_derivative(UPoly p, int k) {
  for (int i = 0; i < k; ++i) p = p.derivative();
  return p;
}

bool has_root_in(const UPoly& p, const RealInterval& iv) {
  if (p.degree() <= 0) return false;
  if (iv.lo == iv.hi) return sgn(p.eval(iv.lo)) == 0;
  return count_roots(squarefree_part(p), iv.lo, iv.hi) > 0;
}

struct ChebAtPole {
  HighFloat c;            // cos(pi/(m+1))
  HighFloat product;      // prod_{j=2}^{m-1} (c - cos(j pi/(m+1)))
  HighFloat u_prev;       // U_{m-1}(c)
  std::vector<HighFloat> u;  // U_j(c), j = 0..m
};

ChebAtPole cheb_at_pole(int m) {
  ChebAtPole out;
  out.c = cos(pi_hf() / (m + 1));
  out.product = 1;
  for (int j = 2; j <= m - 1; ++j) out.product *= out.c - cos(j * pi_hf() / (m + 1));
  for (int j = 0; j <= m; ++j) out.u.push_back(cheb_u_value(j, out.c));
  out.u_prev = out.u[m - 1];
  return out;
}

HighFloat slope_from_numerator(int m, const HighFloat& numerator, const ChebAtPole& v) {
  return numerator / (pow(HighFloat(2), m + 1) * v.c * v.c * v.c * v.u_prev * v.product);
}

}  // namespace

int count_roots(const UPoly& p, const Rational& a, const Rational& b) {
  const auto seq = sturm_sequence(p);
  return sign_changes(seq, a) - sign_changes(seq, b);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, gcd(p, p.derivative())).first;
}

RealInterval refine_root(const UPoly& p, Rational lo, Rational hi, const Rational& width) {
  int s_lo = sgn(p.eval(lo));
  if (s_lo == 0) return {lo, lo};
  if (sgn(p.eval(hi)) == 0) return {hi, hi};
  if (s_lo == sgn(p.eval(hi))) throw std::invalid_argument("refine_root: no sign change");
  while (hi - lo >= width) {
    const Rational mid = (lo + hi) / 2;
    const int s = sgn(p.eval(mid));
    if (s == 0) return {mid, mid};
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

RealInterval smallest_positive_root(const UPoly& p, const Rational& width) {
  if (p.degree() <= 0) throw NoDominantSingularity("constant polynomial has no roots");
  UPoly s = squarefree_part(p);
  // Drop a root at the origin; only positive roots matter.
  while (sgn(s.coeff(0)) == 0) s = divmod(s, UPoly::monomial(1, 1)).first;
  const auto seq = sturm_sequence(s);
  Rational lo(0);
  Rational hi = cauchy_bound(s);
  const int v_lo = sign_changes(seq, lo);
  if (v_lo - sign_changes(seq, hi) == 0) {
    throw NoDominantSingularity("no positive real root of " + p.to_string());
  }
  // Invariant: no root in (0, lo], at least one root in (lo, hi].
  while (v_lo - sign_changes(seq, hi) > 1 || sgn(s.eval(lo)) == sgn(s.eval(hi))) {
    const Rational mid = (lo + hi) / 2;
    if (sgn(s.eval(mid)) == 0) {
      if (v_lo - sign_changes(seq, mid) == 1) return {mid, mid};
      hi = mid;  // mid is a root but a smaller one exists; hi as a root is fine for counting
      continue;
    }
    if (v_lo - sign_changes(seq, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return refine_root(s, lo, hi, width);
}

RealInterval growth_rate(const UnivariateRGF& g) {
  const Rational target = pow10_neg(20);
  RealInterval rho = smallest_positive_root(g.den(), pow10_neg(6));
  if (rho.lo == rho.hi) return {1 / rho.lo, 1 / rho.hi};
  const UPoly s = squarefree_part(g.den());
  while (1 / rho.lo - 1 / rho.hi >= target) {
    rho = refine_root(s, rho.lo, rho.hi, rho.width() / 2);
    if (rho.lo == rho.hi) break;
  }
  return {1 / rho.hi, 1 / rho.lo};
}

DominantTerm dominant_term(const UnivariateRGF& g) {
  const UPoly& den = g.den();
  const UPoly s = squarefree_part(den);
  const RealInterval iv = smallest_positive_root(s, pow10_neg(45));
  int k = 0;
  UPoly rest = den;
  for (;;) {
    const UPoly common = gcd(rest, s);
    if (!has_root_in(common, iv)) break;
    rest = divmod(rest, common).first;
    ++k;
  }
  DominantTerm out;
  out.rho = iv.midpoint();
  out.multiplicity = k;
  // (1 - x/rho)^k g(x) -> (-1)^k k! N(rho) / (rho^k D^(k)(rho)), and
  // [x^n] (1 - x/rho)^-k ~ n^(k-1) rho^-n / (k-1)!.
  const HighFloat n_at = eval_high(g.num(), out.rho);
  const HighFloat dk_at = eval_high(nth_derivative(den, k), out.rho);
  HighFloat c = k * n_at / (pow(out.rho, k) * dk_at);
  if (k % 2 == 1) c = -c;
  out.constant = c;
  return out;
}

ExpectationLaw expectation_law(const RationalGF& f) {
  const DominantTerm count = dominant_term(at_q1(f));
  const DominantTerm first = dominant_term(d_dq_at_q1(f));
  using boost::multiprecision::abs;
  if (abs(count.rho - first.rho) > HighFloat("1e-30") * count.rho) {
    throw std::logic_error("count and derivative series have different dominant poles");
  }
  return ExpectationLaw{first.multiplicity - count.multiplicity, first.constant / count.constant};
}

HighFloat slope_decreasing(int m) {
  if (m < 2) throw InvalidInput("slope_decreasing: m must be >= 2");
  const ChebAtPole v = cheb_at_pole(m);
  HighFloat sum = 0;
  for (int j = 1; j <= m - 1; ++j) sum += v.u[j] * v.u[j];
  return slope_from_numerator(m, sum, v);
}

HighFloat slope_hat(int m) {
  if (m < 4) throw InvalidInput("slope_hat: m must be >= 4");
  const ChebAtPole v = cheb_at_pole(m);
  HighFloat sum = v.u[2];
  for (int j = 2; j <= m - 1; ++j) sum += v.u[j] * v.u[j];
  return slope_from_numerator(m, sum, v);
}

HighFloat slope_hat_sum_from_one(int m) {
  if (m < 4) throw InvalidInput("slope_hat_sum_from_one: m must be >= 4");
  const ChebAtPole v = cheb_at_pole(m);
  HighFloat sum = v.u[2];
  for (int j = 1; j <= m - 1; ++j) sum += v.u[j] * v.u[j];
  return slope_from_numerator(m, sum, v);
}

AlphaConstants alpha_constants(int m) {
  if (m < 2) throw InvalidInput("alpha_constants: m must be >= 2");
  const ChebAtPole v = cheb_at_pole(m);
  HighFloat sum = 0;
  for (int j = 1; j <= m - 1; ++j) sum += v.u[j] * v.u[j];
  const HighFloat c2 = v.c * v.c;
  AlphaConstants out;
  out.alpha = sum / (pow(HighFloat(4), m) * c2 * c2 * v.product * v.product);
  out.alpha_tilde = v.u_prev / (pow(HighFloat(2), m - 1) * v.c * v.product);
  return out;
}

IncreasingAsymptotics increasing_asymptotics(int m) {
  if (m < 3) throw InvalidInput("increasing_asymptotics: m must be >= 3");
  IncreasingAsymptotics out;
  out.lead_coefficient = Rational(catalan(m - 2), factorial(2 * m - 4));
  out.lead_coefficient.canonicalize();
  out.exponent = 2 * m - 4;
  out.expected_limit = m - 1;
  return out;
}

RealInterval table_cubic_root() {
  const UPoly cubic{Rational(-3), Rational(5), Rational(-4), Rational(1)};
  return refine_root(cubic, Rational(2), Rational(3), pow10_neg(20));
}

HighFloat table_cubic_slope() {
  const UPoly cubic{Rational(-3), Rational(5), Rational(-4), Rational(1)};
  const RealInterval iv = refine_root(cubic, Rational(2), Rational(3), pow10_neg(45));
  const HighFloat a = iv.midpoint();
  return (-5 * a * a + 22 * a - 9) / 31;
}

}  // namespace lisgf
