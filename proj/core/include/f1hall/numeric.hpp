#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace f1hall {

// Exact arithmetic everywhere: arbitrary-precision integers for structure
// constants, normalized rationals for Hopf operations. No floating point.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace f1hall
