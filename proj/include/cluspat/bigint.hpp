#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cluspat {

// Exact arbitrary-precision integer. Cluster variable and F-polynomial
// coefficients overflow 64-bit quickly, so everything downstream uses this.
using Int = boost::multiprecision::cpp_int;

} // namespace cluspat
