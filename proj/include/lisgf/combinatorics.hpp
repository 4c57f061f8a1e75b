#pragma once

#include "lisgf/polynomial.hpp"

namespace lisgf {

Integer binomial(int n, int k);

/// C_n = binom(2n, n) / (n + 1).
Integer catalan(int n);

/// N(n, k) = binom(n, k) binom(n, k - 1) / n for 1 <= k <= n; zero otherwise.
Integer narayana(int n, int k);

Integer factorial(int n);

}  // namespace lisgf
