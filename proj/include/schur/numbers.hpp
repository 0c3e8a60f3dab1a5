#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schur {

// Exact arithmetic everywhere: Kostka numbers and monomial counts exceed 2^32
// and intermediate sums must never wrap.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace schur
