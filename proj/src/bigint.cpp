#include "wimlab/bigint.hpp"

#include "wimlab/errors.hpp"

namespace wimlab {

BigInt checked_div(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw StructureViolation("checked_div: zero divisor");
  }
  BigInt quot;
  BigInt rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) {
    throw StructureViolation("checked_div: " + num.str() + " is not divisible by " +
                             den.str());
  }
  return quot;
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace wimlab
