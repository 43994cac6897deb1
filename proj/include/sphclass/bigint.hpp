#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sphclass {

// Weyl group orders overflow 64 bits from rank ~20 on (B30 has order 2^30 * 30!).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace sphclass
