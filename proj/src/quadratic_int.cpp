#include "avoid1324/quadratic_int.hpp"

namespace avoid1324 {

int QuadraticInt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: the term with the larger square wins.
  const BigInt lhs = a_ * a_;
  const BigInt rhs = 3 * b_ * b_;
  if (lhs == rhs) return 0;  // unreachable for b != 0 since √3 is irrational
  return lhs > rhs ? sa : sb;
}

Real QuadraticInt::to_real() const {
  return Real(a_) + Real(b_) * boost::multiprecision::sqrt(Real(3));
}

QuadraticInt pow(QuadraticInt base, unsigned exponent) {
  QuadraticInt result(1);
  while (exponent) {
    if (exponent & 1u) result = result * base;
    base = base * base;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace avoid1324
