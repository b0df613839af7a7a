#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "avoid1324/numeric.hpp"
#include "avoid1324/type_word.hpp"

namespace avoid1324 {

/// True iff no C is immediately followed by a B.
bool is_cb_free(const TypeWord& word);

/// h_0..h_N, the numbers of CB-free words of each length.
class CountSequence {
 public:
  explicit CountSequence(std::vector<BigInt> values);

  const BigInt& operator[](std::size_t n) const { return values_[n]; }
  std::size_t size() const { return values_.size(); }
  const std::vector<BigInt>& values() const { return values_; }

 private:
  std::vector<BigInt> values_;
};

/// h_0 = 1, h_1 = 4, h_n = 4 h_{n-1} - h_{n-2}.
CountSequence count_cb_free(std::size_t max_length);

inline constexpr std::size_t kMaxEnumeratedWordLength = 10;

/// Every CB-free word of length n in lexicographic order (A < B < C < D).
/// Throws LimitExceeded above max_length.
void for_each_cb_free(std::size_t n, const std::function<void(const TypeWord&)>& visit,
                      std::size_t max_length = kMaxEnumeratedWordLength);
std::vector<TypeWord> enumerate_cb_free(std::size_t n,
                                        std::size_t max_length = kMaxEnumeratedWordLength);

/// First count+1 coefficients of numerator/denominator as formal power series,
/// by long division over the integers. The constant term of the denominator
/// must be +-1.
std::vector<BigInt> series_divide(const std::vector<BigInt>& numerator,
                                  const std::vector<BigInt>& denominator, std::size_t count);

/// Taylor coefficients of 1/(1 - 4x + x^2) up to x^N.
std::vector<BigInt> gf_coefficients(std::size_t max_power);

/// ((3+2√3)/6)(2+√3)^n + ((3-2√3)/6)(2-√3)^n in extended precision.
Real h_closed_form(std::size_t n);

}  // namespace avoid1324
