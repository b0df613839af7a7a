#include "avoid1324/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "avoid1324/words.hpp"

namespace avoid1324 {

namespace {

const Permutation kPattern1324{1, 3, 2, 4};

BigInt h_prev_squared(std::size_t n) {
  const auto h = count_cb_free(n - 1);
  return h[n - 1] * h[n - 1];
}

double ratio(const Real& num, const Real& den) { return static_cast<double>(num / den); }

}  // namespace

QuadraticInt headline_base() { return {7, 4}; }

double CountReport::ratio_to_h_prev_sq() const { return ratio(Real(s_n), Real(h_prev_sq)); }
double CountReport::ratio_to_16() const { return ratio(Real(s_n), Real(bound_16)); }
double CountReport::ratio_to_headline() const { return ratio(Real(s_n), headline); }

CountReport make_report(std::size_t n, const BigInt& s_n) {
  if (n == 0) throw std::invalid_argument("report length must be at least 1");
  CountReport r;
  r.n = n;
  r.s_n = s_n;
  r.h_prev_sq = h_prev_squared(n);
  r.bound_16 = boost::multiprecision::pow(BigInt(16), static_cast<unsigned>(n));
  r.headline_exact = pow(headline_base(), static_cast<unsigned>(n));
  r.headline = r.headline_exact.to_real();
  return r;
}

CountReport verify_corollary(std::size_t n, const EnumerationLimits& limits) {
  return make_report(n, count_avoiders(n, kPattern1324, limits));
}

bool verify_16(std::size_t n, const EnumerationLimits& limits) {
  return verify_corollary(n, limits).below_16();
}

bool verify_headline(std::size_t n, const EnumerationLimits& limits) {
  const auto r = verify_corollary(n, limits);
  return r.below_headline() && r.h_prev_sq_below_headline();
}

bool h_prev_sq_below_headline(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return QuadraticInt(h_prev_squared(n)) < pow(headline_base(), static_cast<unsigned>(n));
}

std::vector<GrowthRow> growth_table(std::size_t n_max, const EnumerationLimits& limits) {
  std::vector<GrowthRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt s = count_avoiders(n, kPattern1324, limits);
    const double root = std::pow(static_cast<double>(s), 1.0 / static_cast<double>(n));
    rows.push_back({n, std::move(s), root});
  }
  return rows;
}

}  // namespace avoid1324
