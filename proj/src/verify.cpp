#include "lisgf/verify.hpp"

#include <set>

#include "lisgf/errors.hpp"
#include "lisgf/gf_engine.hpp"
#include "lisgf/rational_gf.hpp"

namespace lisgf {

VerificationReport verify_series(const Permutation& tau, int n_max, const OracleOptions& options) {
  if (n_max < 0) throw InvalidInput("verify_series: n_max must be nonnegative");
  if (n_max > options.cap) {
    throw EnumerationCapExceeded("verification up to " + std::to_string(n_max) + " exceeds the cap " +
                                 std::to_string(options.cap));
  }
  const SeriesTable table = series(f_tau(tau), n_max);
  const std::vector<Permutation> patterns{Permutation{3, 1, 2}, tau};

  VerificationReport report;
  report.tau = tau;
  report.n_max = n_max;
  report.match = true;
  for (int n = 0; n <= n_max; ++n) {
    VerificationRow row;
    row.n = n;
    row.oracle = lis_histogram(patterns, n, options);
    for (int k = 0; k <= n_max; ++k) {
      const Integer c = as_count(table[n][k]);
      if (c != 0) row.engine.emplace(k, c);
    }
    row.match = row.oracle == row.engine;
    if (!row.match && !report.first_mismatch) {
      std::set<int> ks;
      for (const auto& [k, c] : row.oracle) ks.insert(k);
      for (const auto& [k, c] : row.engine) ks.insert(k);
      for (int k : ks) {
        auto o = row.oracle.count(k) ? row.oracle.at(k) : Integer(0);
        auto e = row.engine.count(k) ? row.engine.at(k) : Integer(0);
        if (o != e) {
          report.first_mismatch = Mismatch{n, k, o, e};
          break;
        }
      }
    }
    report.match = report.match && row.match;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace lisgf
