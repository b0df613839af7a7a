#include "avoid1324/words.hpp"

#include <stdexcept>
#include <string>

#include "avoid1324/enumerate.hpp"

namespace avoid1324 {

bool is_cb_free(const TypeWord& word) {
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i - 1] == Mark::C && word[i] == Mark::B) return false;
  return true;
}

CountSequence::CountSequence(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 1) throw std::invalid_argument("CountSequence must start at h_0 = 1");
  if (values_.size() > 1 && values_[1] != 4) throw std::invalid_argument("CountSequence must have h_1 = 4");
  for (std::size_t n = 2; n < values_.size(); ++n)
    if (values_[n] != 4 * values_[n - 1] - values_[n - 2])
      throw std::invalid_argument("CountSequence breaks the recurrence at n = " + std::to_string(n));
}

CountSequence count_cb_free(std::size_t max_length) {
  std::vector<BigInt> h;
  h.reserve(max_length + 1);
  h.emplace_back(1);
  if (max_length >= 1) h.emplace_back(4);
  for (std::size_t n = 2; n <= max_length; ++n) h.push_back(4 * h[n - 1] - h[n - 2]);
  return CountSequence(std::move(h));
}

namespace {

void extend_cb_free(std::size_t n, TypeWord& word, const std::function<void(const TypeWord&)>& visit) {
  if (word.size() == n) {
    visit(word);
    return;
  }
  const bool after_c = !word.empty() && word[word.size() - 1] == Mark::C;
  for (Mark m : kMarks) {
    if (after_c && m == Mark::B) continue;
    word.push_back(m);
    extend_cb_free(n, word, visit);
    word.pop_back();
  }
}

}  // namespace

void for_each_cb_free(std::size_t n, const std::function<void(const TypeWord&)>& visit,
                      std::size_t max_length) {
  if (n > max_length)
    throw LimitExceeded("word length " + std::to_string(n) + " exceeds cap " + std::to_string(max_length));
  TypeWord word;
  extend_cb_free(n, word, visit);
}

std::vector<TypeWord> enumerate_cb_free(std::size_t n, std::size_t max_length) {
  std::vector<TypeWord> out;
  for_each_cb_free(n, [&](const TypeWord& w) { out.push_back(w); }, max_length);
  return out;
}

std::vector<BigInt> series_divide(const std::vector<BigInt>& numerator,
                                  const std::vector<BigInt>& denominator, std::size_t count) {
  if (denominator.empty() || abs(denominator[0]) != 1)
    throw std::invalid_argument("denominator constant term must be +-1");
  // Remainder series, consumed one leading term at a time.
  std::vector<BigInt> remainder(count + 1, 0);
  for (std::size_t i = 0; i < numerator.size() && i <= count; ++i) remainder[i] = numerator[i];
  std::vector<BigInt> quotient(count + 1);
  for (std::size_t k = 0; k <= count; ++k) {
    quotient[k] = remainder[k] / denominator[0];
    for (std::size_t j = 0; j < denominator.size() && k + j <= count; ++j)
      remainder[k + j] -= quotient[k] * denominator[j];
  }
  return quotient;
}

std::vector<BigInt> gf_coefficients(std::size_t max_power) {
  return series_divide({BigInt(1)}, {BigInt(1), BigInt(-4), BigInt(1)}, max_power);
}

Real h_closed_form(std::size_t n) {
  const Real root3 = boost::multiprecision::sqrt(Real(3));
  const Real plus = (3 + 2 * root3) / 6 * boost::multiprecision::pow(2 + root3, static_cast<int>(n));
  const Real minus = (3 - 2 * root3) / 6 * boost::multiprecision::pow(2 - root3, static_cast<int>(n));
  return plus + minus;
}

}  // namespace avoid1324
