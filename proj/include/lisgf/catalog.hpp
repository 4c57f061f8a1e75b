#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lisgf/high_precision.hpp"
#include "lisgf/permutation.hpp"
#include "lisgf/rational_gf.hpp"

namespace lisgf {

/// Published closed forms for F_tau, kept independent of the recursive
/// engine so the two can be checked against each other.

/// F_{12...m} as a Narayana-weighted sum, m >= 2:
/// 1 + qx/(1-x) + sum_{j=2}^{m-1} q^j x^j / (1-x)^{2j-1} * sum_k N(j-1,k) x^{k-1}.
RationalGF f_increasing_closed(int m);

/// F_{rho 1} = 1 / (1 - xq - x(F_rho - 1)).
RationalGF f_append_one(const RationalGF& f_rho);

struct CatalogEntry {
  std::string source;
  RationalGF gf;
};

/// Every catalogued closed form that applies to tau, in precedence order.
std::vector<CatalogEntry> catalog_entries(const Permutation& tau);

/// The first entry of catalog_entries, if any.
std::optional<RationalGF> known_closed_form(const Permutation& tau);

/// One row of the summary table for tau in S_4(312).
struct Table4Row {
  std::vector<Permutation> patterns;
  std::string gf_text;
  RationalGF gf;
  /// Exact E(L_n) and E(L_n^2) formulas, where the table gives them.
  bool has_exact_moments = false;
  /// E(L_n) ~ slope * n, or E(L_n) -> slope when linear is false.
  bool linear = true;
  std::string slope_text;
  HighFloat slope;
};

const std::vector<Table4Row>& table4();

struct MomentFormula {
  Rational mean;
  Rational second_moment;
};

/// Printed exact formulas for E(L_n), E(L_n^2), n >= 1, for tau in S_3(312),
/// 1234, and the 1243 / 1324 / 2134 group.
std::optional<MomentFormula> printed_moments(const Permutation& tau, int n);

}  // namespace lisgf
