#include <set>

#include "doctest.h"
#include "lisgf/catalog.hpp"
#include "lisgf/errors.hpp"
#include "lisgf/gf_engine.hpp"
#include "lisgf/oracle.hpp"
#include "lisgf/verify.hpp"
#include "naive.hpp"

using namespace lisgf;

namespace {

const Permutation p312{3, 1, 2};

std::vector<std::vector<int>> as_vectors(const std::vector<Permutation>& ps) {
  std::vector<std::vector<int>> out;
  for (const auto& p : ps) out.push_back(naive::to_vec(p));
  return out;
}

}  // namespace

TEST_CASE("enumerate_class examples") {
  const auto a = enumerate_class({p312, Permutation{3, 2, 1}}, 3);
  CHECK(a == std::vector<Permutation>{{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}});
  for (int n = 1; n <= 8; ++n) {
    const auto b = enumerate_class({p312, Permutation{1, 2}}, n);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Permutation::decreasing(n));
  }
  CHECK(enumerate_class({p312, Permutation{1, 2, 4, 3}}, 4).size() == 13);
  CHECK(enumerate_class({p312}, 0) == std::vector<Permutation>{Permutation()});
  CHECK(enumerate_class({Permutation()}, 3).empty());
}

TEST_CASE("enumerate_class matches filtering all of S_n") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& tau : std::vector<Permutation>{{1, 2, 3}, {3, 2, 1}, {2, 1, 4, 3}, {1, 3, 4, 2}, {2, 4, 1, 3}}) {
      const auto fast = enumerate_class({p312, tau}, n);
      const auto slow = naive::avoiders({{3, 1, 2}, naive::to_vec(tau)}, n);
      CHECK(as_vectors(fast) == slow);
    }
  }
}

TEST_CASE("enumeration is ordered, duplicate-free and thread-count independent") {
  const std::vector<Permutation> patterns{p312, Permutation{2, 1, 4, 3}};
  OracleOptions one_thread;
  one_thread.threads = 1;
  OracleOptions many;
  many.threads = 8;
  const auto a = enumerate_class(patterns, 10, one_thread);
  const auto b = enumerate_class(patterns, 10, many);
  CHECK(a == b);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::set<Permutation>(a.begin(), a.end()).size() == a.size());
  std::vector<Permutation> streamed;
  for_each_in_class(patterns, 10, [&](const Permutation& p) { streamed.push_back(p); });
  CHECK(streamed == a);
  for (const auto& p : a) CHECK(avoids_all(p, patterns));
}

TEST_CASE("cap") {
  OracleOptions o;
  o.cap = 5;
  CHECK_THROWS_AS(enumerate_class({p312}, 6, o), EnumerationCapExceeded);
  CHECK_THROWS_AS(lis_histogram({p312}, 6, o), EnumerationCapExceeded);
  CHECK_THROWS_AS(verify_series(Permutation{2, 1}, 6, o), EnumerationCapExceeded);
  CHECK(enumerate_class({p312}, 5, o).size() == 42);
  CHECK(default_oracle_cap() >= 1);
}

TEST_CASE("lis_histogram") {
  CHECK(lis_histogram({p312, Permutation{3, 2, 1}}, 3) == std::map<int, Integer>{{2, 3}, {3, 1}});
  CHECK(lis_histogram({p312, Permutation{2, 1, 3}}, 0) == std::map<int, Integer>{{0, 1}});
  for (int n = 1; n <= 8; ++n) {
    const auto h = lis_histogram({p312, Permutation{1, 2, 3}}, n);
    Rational total(0);
    Rational weighted(0);
    for (const auto& [k, c] : h) {
      total += Rational(c);
      weighted += k * Rational(c);
    }
    CHECK(weighted / total == printed_moments(Permutation{1, 2, 3}, n)->mean);
  }
}

TEST_CASE("oracle counts for S_3(312)") {
  const auto f123 = coeffs_by_recurrence(at_q1(f_tau(Permutation{1, 2, 3})), 10);
  for (int n = 1; n <= 10; ++n) {
    for (const auto& tau : std::vector<Permutation>{{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 2, 1}}) {
      CHECK(enumerate_class({p312, tau}, n).size() == (1u << (n - 1)));
    }
    CHECK(Rational(static_cast<long>(enumerate_class({p312, Permutation{1, 2, 3}}, n).size())) == f123[n]);
  }
}

TEST_CASE("verify_series") {
  const VerificationReport a = verify_series(Permutation{1, 2, 4, 3}, 7);
  CHECK(a.match);
  CHECK(a.rows.size() == 8);
  CHECK_FALSE(a.first_mismatch.has_value());
  const VerificationReport b = verify_series(Permutation{2, 1}, 5);
  CHECK(b.match);
  for (const auto& row : b.rows) CHECK(row.oracle == std::map<int, Integer>{{row.n, 1}});
  CHECK(verify_series(Permutation{4, 3, 2, 1}, 8).match);
  CHECK(verify_series(Permutation{4, 5, 3, 2, 1}, 8).match);
}
