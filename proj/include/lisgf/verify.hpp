#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lisgf/oracle.hpp"
#include "lisgf/permutation.hpp"

namespace lisgf {

struct VerificationRow {
  int n = 0;
  std::map<int, Integer> oracle;
  std::map<int, Integer> engine;
  bool match = false;
};

struct Mismatch {
  int n = 0;
  int k = 0;
  Integer oracle;
  Integer engine;
};

struct VerificationReport {
  Permutation tau;
  int n_max = 0;
  std::vector<VerificationRow> rows;
  bool match = false;
  std::optional<Mismatch> first_mismatch;
};

/// Compare the oracle's LIS histograms for S_n(312, tau) with the rows of the
/// generating function's series, for every n <= n_max.
VerificationReport verify_series(const Permutation& tau, int n_max, const OracleOptions& options = {});

}  // namespace lisgf
