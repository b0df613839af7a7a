#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace avoid1324 {

/// Exact integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;

/// Extended-precision real (50 decimal digits, well above 64 significand bits).
using Real = boost::multiprecision::cpp_bin_float_50;

}  // namespace avoid1324
