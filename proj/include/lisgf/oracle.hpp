#pragma once

#include <functional>
#include <map>
#include <vector>

#include "lisgf/permutation.hpp"
#include "lisgf/polynomial.hpp"

namespace lisgf {

/// Brute-force enumeration of pattern classes. Shares nothing with the
/// generating-function code beyond permutation primitives.

/// Largest n the oracle enumerates unless told otherwise: 12, or the value of
/// the LISGF_ORACLE_CAP environment variable when it holds a positive integer.
int default_oracle_cap();

struct OracleOptions {
  int cap = default_oracle_cap();
  /// Worker threads; 0 picks the hardware concurrency. Output order does not
  /// depend on this.
  unsigned threads = 0;
};

/// Permutations of [n] avoiding every pattern in `patterns`, in lexicographic
/// order. Throws EnumerationCapExceeded when n > options.cap.
std::vector<Permutation> enumerate_class(const std::vector<Permutation>& patterns, int n,
                                         const OracleOptions& options = {});

/// Streaming variant, single-threaded, same order.
void for_each_in_class(const std::vector<Permutation>& patterns, int n,
                       const std::function<void(const Permutation&)>& visit,
                       const OracleOptions& options = {});

/// k -> number of class members of length n with LIS length k.
std::map<int, Integer> lis_histogram(const std::vector<Permutation>& patterns, int n,
                                     const OracleOptions& options = {});

}  // namespace lisgf
