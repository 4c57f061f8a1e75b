#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lisgf {

/// A permutation of {1, ..., n} in one-line notation. The empty permutation
/// (n = 0) is a valid value. Positions and values are 1-based in the public
/// accessors; values() exposes the underlying sequence.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// Value at 1-based position i.
  int at(std::size_t i) const { return values_.at(i - 1); }
  std::span<const int> values() const { return values_; }

  /// Compact digit form ("1243") when n <= 9, comma form otherwise.
  /// The empty permutation renders as "".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// Replace each entry of a word of distinct integers by its rank.
/// Throws InvalidInput on duplicates.
Permutation reduce(std::span<const int> word);

/// True iff some subsequence of `sigma` is order-isomorphic to `tau`.
/// The empty pattern is contained in everything.
bool contains(std::span<const int> sigma, std::span<const int> tau);
bool contains(const Permutation& sigma, const Permutation& tau);

/// Like contains(), but only occurrences using the last entry of `word`
/// as the image of the last entry of `tau` are considered. Used by the
/// prefix-extension enumerator, where all shorter prefixes are known to avoid.
bool contains_ending_at_last(std::span<const int> word, std::span<const int> tau);

inline bool avoids(const Permutation& sigma, const Permutation& tau) {
  return !contains(sigma, tau);
}
bool avoids_all(const Permutation& sigma, std::span<const Permutation> patterns);

/// Length of a longest strictly increasing subsequence, O(n log n).
int lis_length(std::span<const int> word);
inline int lis_length(const Permutation& sigma) { return lis_length(sigma.values()); }

/// O(n^2) dynamic-programming reference for lis_length.
int lis_length_quadratic(std::span<const int> word);

Permutation reverse(const Permutation& sigma);
Permutation complement(const Permutation& sigma);
Permutation inverse(const Permutation& sigma);

/// 1-based positions of the right-to-left minima, left to right.
std::vector<std::size_t> right_to_left_minima(const Permutation& tau);

/// One block of the decomposition tau = tau^(0) m_0 tau^(1) m_1 ... tau^(r) m_r.
/// `word` keeps the original (unreduced) values of tau^(j).
struct NormalFormBlock {
  std::vector<int> word;
  int min_value = 0;

  bool operator==(const NormalFormBlock&) const = default;
};

class NormalForm {
 public:
  NormalForm(Permutation source, std::vector<NormalFormBlock> blocks);

  const Permutation& source() const { return source_; }
  const std::vector<NormalFormBlock>& blocks() const { return blocks_; }
  const NormalFormBlock& block(std::size_t j) const { return blocks_.at(j); }

  /// Number of right-to-left minima minus one.
  std::size_t r() const { return blocks_.size() - 1; }

  /// tau^(0) m_0 ... tau^(j) m_j as an unreduced word; j = -1 yields the empty word.
  std::vector<int> prefix(int j) const;

  /// Reduced form of tau^(j) m_j ... tau^(r) m_r.
  Permutation suffix(std::size_t j) const;

 private:
  Permutation source_;
  std::vector<NormalFormBlock> blocks_;
};

/// Decompose a nonempty 312-avoiding pattern along its right-to-left minima.
/// Throws UnsupportedPattern if tau contains 312, InvalidInput if tau is empty.
NormalForm normal_form(const Permutation& tau);

/// Parse "1243" (compact, length <= 9) or "10,1,2,3,4,5,6,7,8,9".
Permutation parse_permutation(const std::string& text);

/// All permutations of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace lisgf
