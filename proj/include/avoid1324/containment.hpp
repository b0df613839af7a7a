#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "avoid1324/permutation.hpp"

namespace avoid1324 {

/// True iff some subsequence of p is order-isomorphic to q. False when |q| > |p|.
bool contains(const Permutation& p, const Permutation& q);
inline bool avoids(const Permutation& p, const Permutation& q) { return !contains(p, q); }

/// Same search over any sequence of distinct values (prefixes, subsequences).
bool contains(std::span<const int> sequence, const Permutation& q);

/// True iff the sequence contains q using its final element as the image of q's
/// final entry. Appending one element to a q-avoiding sequence creates an
/// occurrence exactly when this holds.
bool completes_occurrence(std::span<const int> sequence, const Permutation& q);

struct Extremum {
  std::size_t position;  // 1-based
  int value;
  friend bool operator==(const Extremum&, const Extremum&) = default;
};

/// Left-to-right minima in increasing position order; p_1 always included.
std::vector<Extremum> ltr_minima(const Permutation& p);
/// Right-to-left maxima in increasing position order; p_n always included.
std::vector<Extremum> rtl_maxima(const Permutation& p);

/// Same scans over any sequence of distinct values, e.g. a color class.
std::vector<Extremum> ltr_minima(std::span<const int> sequence);
std::vector<Extremum> rtl_maxima(std::span<const int> sequence);

}  // namespace avoid1324
