#pragma once

#include <ostream>
#include <string>

#include "lisgf/high_precision.hpp"
#include "lisgf/polynomial.hpp"

namespace lisgf {

/// Entry point of the lisgf command-line tool. Returns the process exit code:
/// 0 on success, 1 when a verification finds a mismatch, 2 on invalid input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fixed-point rendering with `digits` places after the point, rounded half
/// away from zero.
std::string to_decimal(const Rational& value, int digits);
std::string to_decimal(const HighFloat& value, int digits);

}  // namespace lisgf
