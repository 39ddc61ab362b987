#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wimlab {

// All counts in this library are exact arbitrary-precision integers.
// Every formula we evaluate is integer-valued; division is only ever
// performed through checked_div, which asserts exact divisibility.
using BigInt = boost::multiprecision::cpp_int;

// Quotient of num / den, throwing StructureViolation unless den divides num.
BigInt checked_div(const BigInt& num, const BigInt& den);

// Exact decimal rendering (never scientific notation).
std::string to_decimal(const BigInt& v);

}  // namespace wimlab
