#include "lisgf/oracle.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

class Search {
 public:
  Search(const std::vector<Permutation>& patterns, int n) : n_(n), used_(n + 1, false) {
    for (const auto& p : patterns) {
      if (p.empty()) blocked_ = true;
      patterns_.push_back(p.values());
    }
    word_.reserve(n);
  }

  // Visit every class member whose first entry is `first`, in lexicographic order.
  template <class Visit>
  void run_from(int first, Visit&& visit) {
    if (blocked_) return;
    if (!push(first)) return;
    extend(visit);
    pop();
  }

  template <class Visit>
  void run_all(Visit&& visit) {
    if (blocked_) return;
    if (n_ == 0) {
      visit(Permutation());
      return;
    }
    for (int v = 1; v <= n_; ++v) run_from(v, visit);
  }

 private:
  bool push(int v) {
    word_.push_back(v);
    for (const auto& p : patterns_) {
      if (p.size() <= word_.size() && contains_ending_at_last(word_, p)) {
        word_.pop_back();
        return false;
      }
    }
    used_[v] = true;
    return true;
  }

  void pop() {
    used_[word_.back()] = false;
    word_.pop_back();
  }

  template <class Visit>
  void extend(Visit& visit) {
    if (static_cast<int>(word_.size()) == n_) {
      visit(Permutation(word_));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[v] || !push(v)) continue;
      extend(visit);
      pop();
    }
  }

  int n_;
  bool blocked_ = false;
  std::vector<std::span<const int>> patterns_;
  std::vector<int> word_;
  std::vector<bool> used_;
};

void check_cap(int n, const OracleOptions& options) {
  if (n < 0) throw InvalidInput("enumerate_class: n must be nonnegative");
  if (n > options.cap) {
    throw EnumerationCapExceeded("enumeration of length " + std::to_string(n) + " exceeds the cap " +
                                 std::to_string(options.cap));
  }
}

// Runs work(first, out[first - 1]) for first = 1..n across a thread pool.
template <class Result, class Work>
std::vector<Result> split_by_first(int n, unsigned threads, Work work) {
  std::vector<Result> out(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int v = next++; v <= n; v = next++) work(v, out[v - 1]);
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  return out;
}

}  // namespace

int default_oracle_cap() {
  if (const char* env = std::getenv("LISGF_ORACLE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100) return static_cast<int>(v);
  }
  return 12;
}

void for_each_in_class(const std::vector<Permutation>& patterns, int n,
                       const std::function<void(const Permutation&)>& visit, const OracleOptions& options) {
  check_cap(n, options);
  Search(patterns, n).run_all(visit);
}

std::vector<Permutation> enumerate_class(const std::vector<Permutation>& patterns, int n,
                                         const OracleOptions& options) {
  check_cap(n, options);
  std::vector<Permutation> all;
  if (n == 0) {
    Search(patterns, 0).run_all([&](const Permutation& p) { all.push_back(p); });
    return all;
  }
  auto parts = split_by_first<std::vector<Permutation>>(n, options.threads, [&](int first, auto& out) {
    Search(patterns, n).run_from(first, [&](const Permutation& p) { out.push_back(p); });
  });
  for (auto& part : parts) {
    for (auto& p : part) all.push_back(std::move(p));
  }
  return all;
}

std::map<int, Integer> lis_histogram(const std::vector<Permutation>& patterns, int n,
                                     const OracleOptions& options) {
  check_cap(n, options);
  std::map<int, Integer> hist;
  if (n == 0) {
    Search(patterns, 0).run_all([&](const Permutation& p) { hist[lis_length(p)] += 1; });
    return hist;
  }
  auto parts = split_by_first<std::map<int, long>>(n, options.threads, [&](int first, auto& out) {
    Search(patterns, n).run_from(first, [&](const Permutation& p) { ++out[lis_length(p)]; });
  });
  for (const auto& part : parts) {
    for (const auto& [k, c] : part) hist[k] += c;
  }
  return hist;
}

}  // namespace lisgf
