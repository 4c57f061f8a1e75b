#include "lisgf/combinatorics.hpp"

namespace lisgf {

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

Integer narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace lisgf
