#pragma once

#include "avoid1324/numeric.hpp"

namespace avoid1324 {

/// Exact element a + b√3 of Z[√3]. Ordering is decided exactly from the signs
/// of a and b and, when they disagree, from a^2 versus 3b^2.
class QuadraticInt {
 public:
  QuadraticInt() = default;
  QuadraticInt(BigInt a, BigInt b = 0) : a_(std::move(a)), b_(std::move(b)) {}

  const BigInt& rational() const { return a_; }
  const BigInt& irrational() const { return b_; }

  /// -1, 0 or +1.
  int sign() const;

  Real to_real() const;

  friend QuadraticInt operator+(const QuadraticInt& x, const QuadraticInt& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadraticInt operator-(const QuadraticInt& x, const QuadraticInt& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadraticInt operator*(const QuadraticInt& x, const QuadraticInt& y) {
    return {x.a_ * y.a_ + 3 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const QuadraticInt&, const QuadraticInt&) = default;
  friend bool operator<(const QuadraticInt& x, const QuadraticInt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadraticInt& x, const QuadraticInt& y) { return y < x; }

 private:
  BigInt a_ = 0;
  BigInt b_ = 0;
};

QuadraticInt pow(QuadraticInt base, unsigned exponent);

}  // namespace avoid1324
