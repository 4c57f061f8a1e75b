#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lisgf/polynomial.hpp"

namespace lisgf {

/// 128-bit binary mantissa (about 38 decimal digits). Only transcendental
/// quantities (cosines, asymptotic constants) are computed in this type.
using HighFloat = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;

inline HighFloat pi_hf() { return boost::math::constants::pi<HighFloat>(); }

inline HighFloat to_high(const Rational& r) {
  return HighFloat(r.get_num().get_str()) / HighFloat(r.get_den().get_str());
}

inline HighFloat eval_high(const UPoly& p, const HighFloat& t) {
  HighFloat acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * t + to_high(*it);
  return acc;
}

}  // namespace lisgf
