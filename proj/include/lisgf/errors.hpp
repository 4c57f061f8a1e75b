#pragma once

#include <stdexcept>
#include <string>

namespace lisgf {

/// Malformed input: duplicate entries, empty patterns where one is required,
/// unparsable pattern text.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The pattern contains 312, so S_n(312, tau) = S_n(312) and no
/// refined generating function is computed for it.
class UnsupportedPattern : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fraction whose denominator vanishes at the origin has no power series.
class NotSeriesExpandable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact evaluation hit a zero of the denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Substituting q = 1 annihilated the denominator.
class DegenerateSubstitution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NoDominantSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Brute-force enumeration refused because n exceeds the configured cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lisgf
