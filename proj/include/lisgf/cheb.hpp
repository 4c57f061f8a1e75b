#pragma once

#include <cstdint>
#include <vector>

#include "lisgf/high_precision.hpp"
#include "lisgf/permutation.hpp"
#include "lisgf/polynomial.hpp"
#include "lisgf/rational_gf.hpp"

namespace lisgf {

/// U_m(t), Chebyshev polynomial of the second kind, as an integer polynomial.
/// Indices down to -2 are allowed: U_{-1} = 0 and U_{-2} = -1 continue the
/// recurrence U_m = 2t U_{m-1} - U_{m-2} backwards.
class ChebPoly {
 public:
  ChebPoly(int index, std::vector<Integer> coeffs) : index_(index), coeffs_(std::move(coeffs)) {}

  int index() const { return index_; }
  /// Ascending coefficients; empty for U_{-1}.
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational eval(const Rational& t) const;
  HighFloat eval(const HighFloat& t) const;
  UPoly to_upoly() const;

 private:
  int index_;
  std::vector<Integer> coeffs_;
};

ChebPoly cheb_u(int m);

/// U_m(t) by the three-term recurrence, in high precision.
HighFloat cheb_u_value(int m, const HighFloat& t);

/// Compare U_n(t0) from the recurrence with 2^n prod_j (t0 - cos(j pi/(n+1))).
/// Agreement means |lhs - rhs| <= 1e-30 * max(1, |lhs|, |rhs|).
bool cheb_product_check(int n, const HighFloat& t0);

/// P_k(x,q) = (sqrt x)^k U_k((1 + x - xq) / (2 sqrt x)), built by
/// P_{-1} = 0, P_0 = 1, P_k = (1 + x - xq) P_{k-1} - x P_{k-2}.
/// Only even powers of sqrt x survive, so every P_k is a polynomial.
BPoly kernel_p(int k);

/// Exact check of the closed form behind kernel_p: at (d+1)^2 pseudo-random
/// rational points (r^2, q0), d the larger of P_k's degrees in x and q,
/// P_k(r^2, q0) == r^k U_k((1 + r^2 - r^2 q0) / (2r)).
bool kernel_p_certificate(int k, std::uint64_t seed = 1);

/// Q_k(x) = P_k(x, 1): Q_{-1} = 0, Q_0 = 1, Q_k = Q_{k-1} - x Q_{k-2}.
/// Equivalently U_k(1/(2 sqrt x)) = Q_k(x) / (sqrt x)^k.
UPoly kernel_q(int k);

/// Generating function of S_n(312, m(m-1)...1), m >= 1:
/// (P_{m-2} - x P_{m-3}) / (P_{m-1} - x P_{m-2}).
RationalGF f_decreasing(int m);

/// Generating function of S_n(312, (m-1)m(m-2)...1), m >= 3:
/// ((1-x) P_{m-3} - x(1-x+xq) P_{m-4}) / ((1-x) P_{m-2} - x(1-x+xq) P_{m-3}).
RationalGF f_hat(int m);

/// dF/dq at q = 1 for the decreasing pattern, m >= 1:
/// sum_{j=1}^{m-1} x^{m-j} Q_j^2 / Q_m^2.
UnivariateRGF dq_decreasing_closed(int m);

/// dF/dq at q = 1 for the hat pattern, m >= 4, with the U_j^2 sum starting at
/// j = 2: (x^{m-1} Q_2 + sum_{j=2}^{m-1} x^{m-j} Q_j^2) / Q_m^2.
UnivariateRGF dq_hat_closed(int m);

/// The same expression with the U_j^2 sum starting at j = 1, which is the
/// numerator used by the printed slope for the hat family. Kept so the two
/// readings can be compared against the engine.
UnivariateRGF dq_hat_sum_from_one(int m);

/// The hat pattern (m-1) m (m-2) ... 1 as a permutation, m >= 2.
Permutation hat_pattern(int m);

}  // namespace lisgf
