#pragma once

#include <cstddef>
#include <vector>

#include "avoid1324/enumerate.hpp"
#include "avoid1324/numeric.hpp"
#include "avoid1324/quadratic_int.hpp"

namespace avoid1324 {

/// 7 + 4√3 = (2 + √3)^2.
QuadraticInt headline_base();

/// Growth rate of the best known lower-bound construction; informational only.
inline constexpr double kLowerBoundGrowthReference = 9.42;

/// Raw numbers for one length n. Every comparison is recomputed from them on
/// demand; nothing here caches a verdict.
struct CountReport {
  std::size_t n = 0;
  BigInt s_n;                  // |Av_n(1324)|
  BigInt h_prev_sq;            // h_{n-1}^2
  BigInt bound_16;             // 16^n
  QuadraticInt headline_exact; // (7+4√3)^n
  Real headline;               // same, as an extended-precision real

  bool corollary_holds() const { return s_n < h_prev_sq; }
  bool below_16() const { return s_n < bound_16; }
  bool below_headline() const { return QuadraticInt(s_n) < headline_exact; }
  bool h_prev_sq_below_headline() const { return QuadraticInt(h_prev_sq) < headline_exact; }

  /// Comparisons the verifier asserts: the Corollary only from n = 2 on.
  bool asserted_pass() const {
    return below_16() && below_headline() && h_prev_sq_below_headline() && (n < 2 || corollary_holds());
  }

  double ratio_to_h_prev_sq() const;
  double ratio_to_16() const;
  double ratio_to_headline() const;
};

/// Report for a known S_n(1324), e.g. one read from a cache.
CountReport make_report(std::size_t n, const BigInt& s_n);

/// Counts Av_n(1324) and assembles its report.
CountReport verify_corollary(std::size_t n, const EnumerationLimits& limits = {});

bool verify_16(std::size_t n, const EnumerationLimits& limits = {});

/// S_n(1324) < (7+4√3)^n and h_{n-1}^2 < (7+4√3)^n, both decided exactly in Z[√3].
bool verify_headline(std::size_t n, const EnumerationLimits& limits = {});

/// h_{n-1}^2 < (7+4√3)^n, exact; needs no enumeration, so n may be large.
bool h_prev_sq_below_headline(std::size_t n);

struct GrowthRow {
  std::size_t n;
  BigInt s_n;
  double nth_root;  // s_n^(1/n)
};

std::vector<GrowthRow> growth_table(std::size_t n_max, const EnumerationLimits& limits = {});

}  // namespace avoid1324
