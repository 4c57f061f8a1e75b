#include "lisgf/gf_engine.hpp"

#include <stdexcept>

#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

// A value c + a*F_tau, where F_tau is the unknown being solved for. The
// functional equation is linear in F_tau, so products of two terms that both
// involve the unknown never arise.
struct Affine {
  RationalGF constant;
  RationalGF coeff;

  static Affine unknown() { return Affine{RationalGF(0), RationalGF(1)}; }
  static Affine known(RationalGF v) { return Affine{std::move(v), RationalGF(0)}; }

  friend Affine operator+(const Affine& a, const Affine& b) {
    return Affine{a.constant + b.constant, a.coeff + b.coeff};
  }
  friend Affine operator-(const Affine& a, const Affine& b) {
    return Affine{a.constant - b.constant, a.coeff - b.coeff};
  }
  friend Affine operator*(const RationalGF& s, const Affine& a) {
    return Affine{s * a.constant, s * a.coeff};
  }
  friend Affine operator*(const Affine& a, const Affine& b) {
    if (!a.coeff.is_zero() && !b.coeff.is_zero()) {
      throw std::logic_error("functional equation is not linear in F_tau");
    }
    return Affine{a.constant * b.constant, a.constant * b.coeff + a.coeff * b.constant};
  }
};

Affine operator-(const Affine& a, const RationalGF& c) { return a - Affine::known(c); }

}  // namespace

RationalGF GfEngine::f_tau(const Permutation& tau) {
  if (tau.empty()) throw InvalidInput("f_tau: the empty pattern has no generating function");
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(tau);
    if (it != memo_.end()) return it->second;
  }
  RationalGF value = compute(tau);
  std::lock_guard lock(mutex_);
  return memo_.try_emplace(tau, std::move(value)).first->second;
}

RationalGF GfEngine::f_word(std::span<const int> word) {
  if (word.empty()) return RationalGF(0);
  return f_tau(reduce(word));
}

std::size_t GfEngine::cache_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

RationalGF GfEngine::compute(const Permutation& tau) {
  // Throws UnsupportedPattern for patterns containing 312.
  const NormalForm nf = normal_form(tau);
  if (tau.size() == 1) return RationalGF(1);

  const RationalGF x = RationalGF::x();
  const RationalGF xq = RationalGF::x() * RationalGF::q();
  const RationalGF one(1);
  const std::size_t r = nf.r();

  auto F = [&](const std::vector<int>& word) -> Affine {
    if (word.empty()) return Affine::known(RationalGF(0));
    const Permutation p = reduce(word);
    if (p == tau) return Affine::unknown();
    return Affine::known(f_tau(p));
  };
  auto prefix = [&](std::size_t j) { return F(nf.prefix(static_cast<int>(j))); };
  auto suffix = [&](std::size_t j) {
    const Permutation s = nf.suffix(j);
    return F(std::vector<int>(s.values().begin(), s.values().end()));
  };
  const Affine F_tau = Affine::unknown();

  Affine rhs = Affine::known(one + xq);
  if (nf.block(0).word.empty()) {
    // tau starts with 1, so r >= 1.
    rhs = rhs + x * (F_tau - one);
    rhs = rhs + xq * (suffix(1) - one);
    for (std::size_t j = 1; j <= r; ++j) {
      rhs = rhs + x * ((prefix(j) - prefix(j - 1)) * (suffix(j) - one));
    }
  } else {
    const Affine F_head = F(nf.block(0).word);
    if (r == 0) rhs = rhs + x * (F_head - one);
    if (r >= 1) rhs = rhs + x * (F_tau - one);
    rhs = rhs + xq * (F_tau - one);
    for (std::size_t j = 2; j <= r; ++j) {
      rhs = rhs + x * ((prefix(j) - prefix(j - 1)) * (suffix(j) - one));
    }
    if (r >= 1) rhs = rhs + x * ((prefix(1) - F_head) * (suffix(1) - one));
    rhs = rhs + x * ((F_head - one) * (F_tau - one));
  }

  // F = c + a F  =>  F = c / (1 - a); 1 - a = 1 + O(x) is invertible as a series.
  return rhs.constant / (one - rhs.coeff);
}

GfEngine& default_engine() {
  static GfEngine engine;
  return engine;
}

RationalGF f_tau(const Permutation& tau) { return default_engine().f_tau(tau); }

Integer as_count(const Rational& value) {
  if (value.get_den() != 1 || sgn(value) < 0) {
    throw std::logic_error("series coefficient " + value.get_str() +
                           " is not a nonnegative integer");
  }
  return value.get_num();
}

StatSeries stats(const Permutation& tau, int n_max, StatsOptions options) {
  const RationalGF F = f_tau(tau);
  const auto counts = coeffs_by_recurrence(at_q1(F), n_max);
  const auto first = coeffs_by_recurrence(d_dq_at_q1(F), n_max);
  const auto second = coeffs_by_recurrence(d2_dq2_at_q1(F), n_max);
  SeriesTable table;
  if (options.distribution) table = series(F, n_max);

  StatSeries out{tau, {}};
  out.rows.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    StatRow row;
    row.n = n;
    row.count = as_count(counts[n]);
    if (options.distribution) {
      for (int k = 0; k <= n_max; ++k) {
        const Integer c = as_count(table[n][k]);
        if (c != 0) row.distribution.emplace(k, c);
      }
    }
    if (row.count != 0) {
      const Rational s(row.count);
      row.mean = first[n] / s;
      row.second_moment = (second[n] + first[n]) / s;
      row.variance = *row.second_moment - *row.mean * *row.mean;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::map<int, Integer> lis_distribution(const Permutation& tau, int n) {
  const SeriesTable table = series(f_tau(tau), n);
  std::map<int, Integer> out;
  for (int k = 0; k <= n; ++k) {
    const Integer c = as_count(table[n][k]);
    if (c != 0) out.emplace(k, c);
  }
  return out;
}

}  // namespace lisgf
