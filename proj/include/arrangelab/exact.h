#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrangelab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;

/// Parses "p", "-p", "p/q" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view token);

/// Scales a nonzero rational vector to the unique integer vector with unit
/// content whose first nonzero entry is positive. Throws on the zero vector.
IntVector canonical_normal(const std::vector<Rational>& coefficients);

/// Rank of an integer matrix (rows of equal length) by fraction-free
/// (Bareiss) elimination. Runs in 64-bit arithmetic and restarts with
/// arbitrary precision on overflow.
std::size_t integer_rank(const std::vector<IntVector>& rows);

}  // namespace arrangelab
