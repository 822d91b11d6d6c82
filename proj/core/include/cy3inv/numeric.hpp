#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace cy3inv {

/// Arbitrary-precision integer. Every quantity in this library is exact;
/// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used for intermediate values whose integrality is
/// asserted at operation boundaries.
using Rat = boost::multiprecision::cpp_rational;

/// Degree/index type for instanton series and fibre bookkeeping.
using Index = std::int64_t;

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

} // namespace cy3inv
