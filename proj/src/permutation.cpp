#include "lisgf/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lisgf/errors.hpp"

namespace lisgf {

namespace {

void validate_one_line(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) {
      std::ostringstream msg;
      msg << "not a permutation of 1.." << n;
      throw InvalidInput(msg.str());
    }
    seen[v] = true;
  }
}

// For each pattern index t, the index s < t whose value is the nearest below
// (resp. above) tau[t] among tau[0..t). An occurrence is order-isomorphic iff
// every new image lies strictly between the images of those two neighbours.
struct PatternShape {
  std::vector<int> below;
  std::vector<int> above;

  explicit PatternShape(std::span<const int> tau) : below(tau.size(), -1), above(tau.size(), -1) {
    for (std::size_t t = 0; t < tau.size(); ++t) {
      for (std::size_t s = 0; s < t; ++s) {
        if (tau[s] < tau[t] && (below[t] < 0 || tau[s] > tau[below[t]])) below[t] = static_cast<int>(s);
        if (tau[s] > tau[t] && (above[t] < 0 || tau[s] < tau[above[t]])) above[t] = static_cast<int>(s);
      }
    }
  }
};

class Matcher {
 public:
  Matcher(std::span<const int> word, std::span<const int> tau)
      : word_(word), shape_(tau), image_(tau.size(), 0), k_(tau.size()) {}

  bool search(std::size_t t, std::size_t from, std::size_t limit) {
    if (t == k_) return true;
    // Leave room for the k - t - 1 entries that still have to be placed.
    const std::size_t remaining = k_ - t - 1;
    for (std::size_t p = from; p + remaining < limit; ++p) {
      if (!fits(t, word_[p])) continue;
      image_[t] = word_[p];
      if (search(t + 1, p + 1, limit)) return true;
    }
    return false;
  }

  bool search_ending_at_last() {
    const std::size_t n = word_.size();
    if (k_ == 0) return true;
    if (k_ > n) return false;
    return search_fixed(0, 0, n - 1);
  }

 private:
  bool fits(std::size_t t, int value) const {
    if (shape_.below[t] >= 0 && value <= image_[shape_.below[t]]) return false;
    if (shape_.above[t] >= 0 && value >= image_[shape_.above[t]]) return false;
    return true;
  }

  bool search_fixed(std::size_t t, std::size_t from, std::size_t last) {
    if (t + 1 == k_) {
      if (!fits(t, word_[last])) return false;
      image_[t] = word_[last];
      return true;
    }
    const std::size_t remaining = k_ - t - 2;
    for (std::size_t p = from; p + remaining < last; ++p) {
      if (!fits(t, word_[p])) continue;
      image_[t] = word_[p];
      if (search_fixed(t + 1, p + 1, last)) return true;
    }
    return false;
  }

  std::span<const int> word_;
  PatternShape shape_;
  std::vector<int> image_;
  std::size_t k_;
};

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  validate_one_line(values_);
}

Permutation::Permutation(std::initializer_list<int> values) : values_(values) {
  validate_one_line(values_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  const bool compact = values_.size() <= 9;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i > 0) out << ',';
    out << values_[i];
  }
  return out.str();
}

Permutation reduce(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return word[a] < word[b]; });
  std::vector<int> ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      throw InvalidInput("reduce: word has duplicate entries");
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

bool contains(std::span<const int> sigma, std::span<const int> tau) {
  if (tau.size() > sigma.size()) return false;
  Matcher m(sigma, tau);
  return m.search(0, 0, sigma.size());
}

bool contains(const Permutation& sigma, const Permutation& tau) {
  return contains(sigma.values(), tau.values());
}

bool contains_ending_at_last(std::span<const int> word, std::span<const int> tau) {
  Matcher m(word, tau);
  return m.search_ending_at_last();
}

bool avoids_all(const Permutation& sigma, std::span<const Permutation> patterns) {
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Permutation& p) { return contains(sigma, p); });
}

int lis_length(std::span<const int> word) {
  // tails[i] = smallest possible last value of an increasing run of length i + 1
  std::vector<int> tails;
  tails.reserve(word.size());
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

int lis_length_quadratic(std::span<const int> word) {
  std::vector<int> best(word.size(), 1);
  int result = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (word[j] < word[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    result = std::max(result, best[i]);
  }
  return result;
}

Permutation reverse(const Permutation& sigma) {
  std::vector<int> v(sigma.values().rbegin(), sigma.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> v;
  v.reserve(sigma.size());
  for (int x : sigma.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<int> v(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) v[sigma.values()[j] - 1] = static_cast<int>(j) + 1;
  return Permutation(std::move(v));
}

std::vector<std::size_t> right_to_left_minima(const Permutation& tau) {
  std::vector<std::size_t> positions;
  int running_min = static_cast<int>(tau.size()) + 1;
  for (std::size_t i = tau.size(); i >= 1; --i) {
    if (tau.at(i) < running_min) {
      running_min = tau.at(i);
      positions.push_back(i);
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

NormalForm::NormalForm(Permutation source, std::vector<NormalFormBlock> blocks)
    : source_(std::move(source)), blocks_(std::move(blocks)) {}

std::vector<int> NormalForm::prefix(int j) const {
  std::vector<int> word;
  for (int b = 0; b <= j && b < static_cast<int>(blocks_.size()); ++b) {
    word.insert(word.end(), blocks_[b].word.begin(), blocks_[b].word.end());
    word.push_back(blocks_[b].min_value);
  }
  return word;
}

Permutation NormalForm::suffix(std::size_t j) const {
  std::vector<int> word;
  for (std::size_t b = j; b < blocks_.size(); ++b) {
    word.insert(word.end(), blocks_[b].word.begin(), blocks_[b].word.end());
    word.push_back(blocks_[b].min_value);
  }
  return reduce(word);
}

NormalForm normal_form(const Permutation& tau) {
  if (tau.empty()) throw InvalidInput("normal_form: empty pattern");
  static const Permutation p312{3, 1, 2};
  if (contains(tau, p312)) {
    throw UnsupportedPattern("pattern " + tau.to_string() + " contains 312");
  }
  std::vector<NormalFormBlock> blocks;
  std::size_t start = 1;
  for (std::size_t pos : right_to_left_minima(tau)) {
    NormalFormBlock block;
    for (std::size_t i = start; i < pos; ++i) block.word.push_back(tau.at(i));
    block.min_value = tau.at(pos);
    blocks.push_back(std::move(block));
    start = pos + 1;
  }
  return NormalForm(tau, std::move(blocks));
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> values;
  if (text.find(',') == std::string::npos) {
    if (text.size() > 9) {
      throw InvalidInput("compact pattern syntax is limited to length 9; use commas");
    }
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("invalid pattern '" + text + "'");
      values.push_back(c - '0');
    }
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
          item.size() > 6) {
        throw InvalidInput("invalid pattern '" + text + "'");
      }
      values.push_back(std::stoi(item));
    }
    if (!text.empty() && text.back() == ',') throw InvalidInput("invalid pattern '" + text + "'");
  }
  try {
    return Permutation(std::move(values));
  } catch (const InvalidInput&) {
    throw InvalidInput("invalid pattern '" + text + "': not a permutation");
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace lisgf
