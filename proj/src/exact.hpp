#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zsq {

// All identity checks run over arbitrary-precision scalars; the quartic
// cot-power sums leave 64-bit range near n = 1e6.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

ExactInt binomial(unsigned n, unsigned k);
ExactInt pow_int(ExactInt base, unsigned exp);

}  // namespace zsq
