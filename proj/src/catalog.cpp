#include "lisgf/catalog.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lisgf/asymptotics.hpp"
#include "lisgf/cheb.hpp"
#include "lisgf/combinatorics.hpp"
#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

const RationalGF& X() {
  static const RationalGF v = RationalGF::x();
  return v;
}
const RationalGF& Q() {
  static const RationalGF v = RationalGF::q();
  return v;
}

RationalGF power(const RationalGF& base, int e) {
  RationalGF out(1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

bool is_identity(const Permutation& p) { return p == Permutation::identity(static_cast<int>(p.size())); }
bool is_decreasing(const Permutation& p) {
  return p == Permutation::decreasing(static_cast<int>(p.size()));
}
bool is_hat(const Permutation& p) { return p.size() >= 3 && p == hat_pattern(static_cast<int>(p.size())); }

Rational pow2(int e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), v) : Rational(v);
}

std::vector<Table4Row> build_table4() {
  const RationalGF one(1);
  const RationalGF x = X();
  const RationalGF q = Q();
  const RationalGF omx = one - x;
  std::vector<Table4Row> rows;

  Table4Row r1;
  r1.patterns = {Permutation{1, 2, 3, 4}};
  r1.gf_text = "1 + xq/(1-x) + x^2q^2/(1-x)^3 + x^3(1+x)q^3/(1-x)^5";
  r1.gf = one + x * q / omx + power(x * q, 2) / power(omx, 3) +
          power(x, 3) * (one + x) * power(q, 3) / power(omx, 5);
  r1.has_exact_moments = true;
  r1.linear = false;
  r1.slope_text = "3";
  r1.slope = 3;
  rows.push_back(std::move(r1));

  Table4Row r2;
  r2.patterns = {Permutation{1, 2, 4, 3}, Permutation{1, 3, 2, 4}, Permutation{2, 1, 3, 4}};
  r2.gf_text = "1 + xq(qx(2x-1) + (1-x)^2)/((1-x-qx)^2(1-x))";
  r2.gf = one + x * q * (q * x * (2 * x - one) + power(omx, 2)) / (power(omx - q * x, 2) * omx);
  r2.has_exact_moments = true;
  r2.slope_text = "1/2";
  r2.slope = HighFloat(1) / 2;
  rows.push_back(std::move(r2));

  const HighFloat inv_sqrt5 = 1 / boost::multiprecision::sqrt(HighFloat(5));
  Table4Row r3;
  r3.patterns = {Permutation{2, 3, 1, 4}, Permutation{1, 3, 4, 2}};
  r3.gf_text = "1 + xq(1-x)/((1-x)^2 - qx)";
  r3.gf = one + x * q * omx / (power(omx, 2) - q * x);
  r3.slope_text = "1/sqrt(5)";
  r3.slope = inv_sqrt5;
  rows.push_back(std::move(r3));

  Table4Row r4;
  r4.patterns = {Permutation{2, 1, 4, 3}, Permutation{3, 2, 1, 4}, Permutation{2, 4, 3, 1},
                 Permutation{3, 2, 4, 1}, Permutation{3, 4, 2, 1}, Permutation{1, 4, 3, 2}};
  r4.gf_text = "(1-x-qx)/((1-qx)^2 - x)";
  r4.gf = (omx - q * x) / (power(one - q * x, 2) - x);
  r4.slope_text = "1/sqrt(5)";
  r4.slope = inv_sqrt5;
  rows.push_back(std::move(r4));

  Table4Row r5;
  r5.patterns = {Permutation{2, 3, 4, 1}, Permutation{4, 3, 2, 1}};
  r5.gf_text = "(1-x)^3/((1-x)^3 - xq(1-x)^2 - x^3q^2)";
  r5.gf = power(omx, 3) / (power(omx, 3) - x * q * power(omx, 2) - power(x, 3) * power(q, 2));
  r5.slope_text = "(-5a^2+22a-9)/31, a^3-4a^2+5a-3=0";
  r5.slope = table_cubic_slope();
  rows.push_back(std::move(r5));
  return rows;
}

}  // namespace

RationalGF f_increasing_closed(int m) {
  if (m < 2) throw InvalidInput("f_increasing_closed: m must be >= 2");
  const RationalGF one(1);
  const RationalGF x = X();
  const RationalGF q = Q();
  RationalGF out = one + q * x / (one - x);
  for (int j = 2; j <= m - 1; ++j) {
    BPoly inner;
    for (int k = 1; k <= j - 1; ++k) inner += BPoly::monomial(Rational(narayana(j - 1, k)), k - 1, 0);
    out += power(q * x, j) / power(one - x, 2 * j - 1) * RationalGF(inner);
  }
  return out;
}

RationalGF f_append_one(const RationalGF& f_rho) {
  const RationalGF one(1);
  return one / (one - X() * Q() - X() * (f_rho - one));
}

std::vector<CatalogEntry> catalog_entries(const Permutation& tau) {
  std::vector<CatalogEntry> out;
  const int k = static_cast<int>(tau.size());
  if (k == 0) return out;
  if (k == 1) {
    out.push_back({"F_1 = 1", RationalGF(1)});
    return out;
  }
  const RationalGF one(1);
  const RationalGF x = X();
  const RationalGF q = Q();
  if (tau == Permutation{2, 1}) out.push_back({"S2: 1/(1-xq)", one / (one - x * q)});
  if (tau == Permutation{1, 2}) out.push_back({"S2: 1 + xq/(1-x)", one + x * q / (one - x)});
  if (tau == Permutation{1, 2, 3}) {
    out.push_back({"S3: 1 + xq/(1-x) + x^2q^2/(1-x)^3",
                   one + x * q / (one - x) + power(x * q, 2) / power(one - x, 3)});
  }
  if (tau == Permutation{1, 3, 2} || tau == Permutation{2, 1, 3} || tau == Permutation{2, 3, 1}) {
    out.push_back({"S3: (1-x)/(1-x-xq)", (one - x) / (one - x - x * q)});
  }
  if (tau == Permutation{3, 2, 1}) {
    out.push_back({"S3: (1-xq)/((1-xq)^2-x^2q)",
                   (one - x * q) / (power(one - x * q, 2) - power(x, 2) * q)});
  }
  if (is_identity(tau)) out.push_back({"increasing (Narayana sum)", f_increasing_closed(k)});
  if (is_decreasing(tau)) out.push_back({"decreasing (Chebyshev)", f_decreasing(k)});
  if (is_hat(tau)) out.push_back({"hat (Chebyshev)", f_hat(k)});
  if (k == 4) {
    for (const auto& row : table4()) {
      for (const auto& p : row.patterns) {
        if (p == tau) out.push_back({"S4 table: " + row.gf_text, row.gf});
      }
    }
  }
  if (tau.values().back() == 1) {
    const auto head = tau.values().first(tau.size() - 1);
    const Permutation rho = reduce(head);
    if (auto f_rho = known_closed_form(rho)) out.push_back({"rho1 from " + rho.to_string(), f_append_one(*f_rho)});
  }
  return out;
}

std::optional<RationalGF> known_closed_form(const Permutation& tau) {
  auto entries = catalog_entries(tau);
  if (entries.empty()) return std::nullopt;
  return std::move(entries.front().gf);
}

const std::vector<Table4Row>& table4() {
  static const std::vector<Table4Row> rows = build_table4();
  return rows;
}

std::optional<MomentFormula> printed_moments(const Permutation& tau, int n) {
  if (n < 1) return std::nullopt;
  const Rational N(n);
  const Rational n2 = N * N;
  const Rational n3 = n2 * N;
  const Rational n4 = n3 * N;
  if (tau == Permutation{1, 2, 3}) {
    const Rational d = n2 - N + 2;
    return MomentFormula{2 * (n2 - N + 1) / d, 2 * (2 * n2 - 2 * N + 1) / d};
  }
  if (tau == Permutation{1, 3, 2} || tau == Permutation{2, 1, 3} || tau == Permutation{2, 3, 1}) {
    return MomentFormula{(N + 1) / 2, N * (N + 3) / 4};
  }
  if (tau == Permutation{3, 2, 1}) return MomentFormula{3 * N / 4, N * (9 * N + 1) / 16};
  if (tau == Permutation{1, 2, 3, 4}) {
    const Rational d = n4 - 4 * n3 + 11 * n2 - 8 * N + 12;
    return MomentFormula{3 * (n4 - 4 * n3 + 9 * n2 - 6 * N + 4) / d,
                         3 * (3 * n4 - 12 * n3 + 23 * n2 - 14 * N + 4) / d};
  }
  if (tau == Permutation{1, 2, 4, 3} || tau == Permutation{1, 3, 2, 4} || tau == Permutation{2, 1, 3, 4}) {
    const Rational d = (N - 1) * pow2(n - 2) + 1;
    return MomentFormula{pow2(n - 3) * (n2 - N + 4) / d, pow2(n - 4) * (n3 + 5 * N + 2) / d};
  }
  return std::nullopt;
}

}  // namespace lisgf
