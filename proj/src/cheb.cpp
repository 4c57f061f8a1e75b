#include "lisgf/cheb.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>
#include <stdexcept>

#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

std::vector<Integer> times_2t_minus(const std::vector<Integer>& prev, const std::vector<Integer>& prev2) {
  std::vector<Integer> out(std::max(prev.size() + 1, prev2.size()), Integer(0));
  for (std::size_t i = 0; i < prev.size(); ++i) out[i + 1] += 2 * prev[i];
  for (std::size_t i = 0; i < prev2.size(); ++i) out[i] -= prev2[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

BPoly one_plus_x_minus_xq() { return BPoly(1) + BPoly::x() - BPoly::x() * BPoly::q(); }

}  // namespace

Rational ChebPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

HighFloat ChebPoly::eval(const HighFloat& t) const {
  HighFloat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + HighFloat(it->get_str());
  return acc;
}

UPoly ChebPoly::to_upoly() const {
  std::vector<Rational> cs;
  for (const auto& c : coeffs_) cs.emplace_back(c);
  return UPoly(std::move(cs));
}

ChebPoly cheb_u(int m) {
  if (m < -2) throw InvalidInput("cheb_u: index must be >= -2");
  const std::vector<Integer> u0{1};
  const std::vector<Integer> u1{0, 2};
  if (m == -2) return ChebPoly(-2, {Integer(-1)});
  if (m == -1) return ChebPoly(-1, {});
  if (m == 0) return ChebPoly(0, u0);
  std::vector<Integer> prev2 = u0;
  std::vector<Integer> prev = u1;
  for (int k = 2; k <= m; ++k) {
    std::vector<Integer> next = times_2t_minus(prev, prev2);
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return ChebPoly(m, prev);
}

HighFloat cheb_u_value(int m, const HighFloat& t) {
  if (m == -2) return HighFloat(-1);
  if (m == -1) return HighFloat(0);
  HighFloat prev2 = 1;
  HighFloat prev = 2 * t;
  if (m == 0) return prev2;
  for (int k = 2; k <= m; ++k) {
    HighFloat next = 2 * t * prev - prev2;
    prev2 = prev;
    prev = next;
  }
  return prev;
}

bool cheb_product_check(int n, const HighFloat& t0) {
  const HighFloat lhs = cheb_u_value(n, t0);
  HighFloat rhs = boost::multiprecision::pow(HighFloat(2), n);
  for (int j = 1; j <= n; ++j) rhs *= t0 - boost::multiprecision::cos(j * pi_hf() / (n + 1));
  using boost::multiprecision::abs;
  HighFloat scale = std::max({HighFloat(1), abs(lhs), abs(rhs)});
  return abs(lhs - rhs) <= HighFloat("1e-30") * scale;
}

BPoly kernel_p(int k) {
  if (k < -1) throw InvalidInput("kernel_p: index must be >= -1");
  if (k == -1) return BPoly(0);
  const BPoly a = one_plus_x_minus_xq();
  BPoly prev2(0);
  BPoly prev(1);
  for (int i = 1; i <= k; ++i) {
    BPoly next = a * prev - BPoly::x() * prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

bool kernel_p_certificate(int k, std::uint64_t seed) {
  const BPoly p = kernel_p(k);
  const ChebPoly u = cheb_u(k);
  const int d = std::max(p.degree_x(), p.degree_q());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  auto draw = [&] {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    return v;
  };
  for (int i = 0; i < (d + 1) * (d + 1); ++i) {
    Rational r = draw();
    if (r == 0) r = 1;
    const Rational q0 = draw();
    const Rational x0 = r * r;
    Rational rk(1);
    for (int j = 0; j < k; ++j) rk *= r;
    if (p.eval(x0, q0) != rk * u.eval((1 + x0 - x0 * q0) / (2 * r))) return false;
  }
  return true;
}

UPoly kernel_q(int k) {
  if (k < -1) throw InvalidInput("kernel_q: index must be >= -1");
  if (k == -1) return UPoly();
  const UPoly x = UPoly::monomial(1, 1);
  UPoly prev2;
  UPoly prev = UPoly::constant(1);
  for (int i = 1; i <= k; ++i) {
    UPoly next = prev - x * prev2;
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

RationalGF f_decreasing(int m) {
  if (m < 1) throw InvalidInput("f_decreasing: m must be >= 1");
  // x P_{-2} = -1 would be needed for m = 1; F_1 = 1 directly.
  if (m == 1) return RationalGF(1);
  const BPoly x = BPoly::x();
  return RationalGF(kernel_p(m - 2) - x * kernel_p(m - 3), kernel_p(m - 1) - x * kernel_p(m - 2));
}

RationalGF f_hat(int m) {
  if (m < 3) throw InvalidInput("f_hat: m must be >= 3");
  const BPoly x = BPoly::x();
  const BPoly one_minus_x = BPoly(1) - x;
  const BPoly w = x * (one_minus_x + x * BPoly::q());
  const BPoly p4 = m >= 4 ? kernel_p(m - 4) : BPoly(0);
  return RationalGF(one_minus_x * kernel_p(m - 3) - w * p4,
                    one_minus_x * kernel_p(m - 2) - w * kernel_p(m - 3));
}

UnivariateRGF dq_decreasing_closed(int m) {
  if (m < 1) throw InvalidInput("dq_decreasing_closed: m must be >= 1");
  UPoly num;
  for (int j = 1; j <= m - 1; ++j) {
    const UPoly qj = kernel_q(j);
    num += UPoly::monomial(1, m - j) * qj * qj;
  }
  const UPoly qm = kernel_q(m);
  return UnivariateRGF(num, qm * qm);
}

namespace {

UnivariateRGF dq_hat_with_sum_start(int m, int first_j) {
  if (m < 4) throw InvalidInput("dq_hat_closed: m must be >= 4");
  UPoly num = UPoly::monomial(1, m - 1) * kernel_q(2);
  for (int j = first_j; j <= m - 1; ++j) {
    const UPoly qj = kernel_q(j);
    num += UPoly::monomial(1, m - j) * qj * qj;
  }
  const UPoly qm = kernel_q(m);
  return UnivariateRGF(num, qm * qm);
}

}  // namespace

UnivariateRGF dq_hat_closed(int m) { return dq_hat_with_sum_start(m, 2); }

UnivariateRGF dq_hat_sum_from_one(int m) { return dq_hat_with_sum_start(m, 1); }

Permutation hat_pattern(int m) {
  if (m < 2) throw InvalidInput("hat_pattern: m must be >= 2");
  std::vector<int> v{m - 1, m};
  for (int i = m - 2; i >= 1; --i) v.push_back(i);
  return Permutation(std::move(v));
}

}  // namespace lisgf
