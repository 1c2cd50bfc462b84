#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace facetmine {

/// Face counts routinely overflow 64 bits (a single size-n facet already
/// contributes 2^n faces), so all counting runs on arbitrary precision.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount pow2(int exponent) {
  BigCount b = 1;
  b <<= exponent;
  return b;
}

}  // namespace facetmine
