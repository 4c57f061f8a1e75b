#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "lisgf/permutation.hpp"
#include "lisgf/rational_gf.hpp"

namespace lisgf {

/// Computes F_tau(x,q) = sum over sigma in S_n(312, tau) of x^n q^{LIS(sigma)}
/// by recursion over the normal form of tau. Results are memoized by the
/// reduced pattern. Safe to share between threads: the cache is guarded and
/// computation happens outside the lock, so concurrent misses may duplicate
/// work but always store the same canonical value.
class GfEngine {
 public:
  /// Throws InvalidInput for the empty pattern and UnsupportedPattern when
  /// tau contains 312.
  RationalGF f_tau(const Permutation& tau);

  /// F of the reduced form of a word of distinct integers; F of the empty
  /// word is 0.
  RationalGF f_word(std::span<const int> word);

  std::size_t cache_size() const;

 private:
  RationalGF compute(const Permutation& tau);

  mutable std::mutex mutex_;
  std::map<Permutation, RationalGF> memo_;
};

/// Process-wide engine.
GfEngine& default_engine();
RationalGF f_tau(const Permutation& tau);

struct StatRow {
  int n = 0;
  Integer count;                         // s_n
  std::map<int, Integer> distribution;   // LIS length -> count, nonzero entries only
  std::optional<Rational> mean;          // absent when s_n = 0
  std::optional<Rational> second_moment;
  std::optional<Rational> variance;
};

struct StatSeries {
  Permutation tau;
  std::vector<StatRow> rows;
};

struct StatsOptions {
  /// Expanding the bivariate series costs O(n_max^2) coefficients; moment-only
  /// runs at large n skip it.
  bool distribution = true;
};

StatSeries stats(const Permutation& tau, int n_max, StatsOptions options = {});

/// Number of permutations in S_n(312, tau) with LIS exactly k, for each k
/// that occurs.
std::map<int, Integer> lis_distribution(const Permutation& tau, int n);

/// Convert an exact series coefficient that must be a nonnegative integer.
/// Throws std::logic_error otherwise.
Integer as_count(const Rational& value);

}  // namespace lisgf
