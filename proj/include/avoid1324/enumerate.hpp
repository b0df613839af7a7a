#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "avoid1324/numeric.hpp"
#include "avoid1324/permutation.hpp"

namespace avoid1324 {

/// Caps and parallelism for exhaustive enumeration. The cap is configuration;
/// the default keeps S_11(1324) (a few million leaves) within reach.
struct EnumerationLimits {
  std::size_t max_length = 11;
  unsigned jobs = 1;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Calls visit(p) for every p in Av_n(q), in lexicographic order of one-line
/// notation. Prefixes are extended one entry at a time and pruned as soon as
/// the new entry completes an occurrence of q. With jobs > 1 the subtrees
/// rooted at each first entry run concurrently and are replayed in order.
void for_each_avoider(std::size_t n, const Permutation& q,
                      const std::function<void(const Permutation&)>& visit,
                      const EnumerationLimits& limits = {});

std::vector<Permutation> enumerate_avoiders(std::size_t n, const Permutation& q,
                                            const EnumerationLimits& limits = {});

/// |Av_n(q)|, counted without materialising the permutations.
BigInt count_avoiders(std::size_t n, const Permutation& q, const EnumerationLimits& limits = {});

/// C_n = binom(2n, n) / (n + 1); catalan(0) == 1.
BigInt catalan(std::size_t n);

}  // namespace avoid1324
