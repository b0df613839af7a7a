#include "avoid1324/containment.hpp"

#include <limits>

namespace avoid1324 {

namespace {

// For each pattern index d, the earlier pattern indices holding the nearest
// smaller and nearest larger value; these bound the admissible image of q_d.
struct PatternNeighbours {
  std::vector<int> below;  // -1 when none
  std::vector<int> above;

  explicit PatternNeighbours(std::span<const int> q) : below(q.size(), -1), above(q.size(), -1) {
    for (std::size_t d = 0; d < q.size(); ++d) {
      for (std::size_t a = 0; a < d; ++a) {
        if (q[a] < q[d] && (below[d] < 0 || q[a] > q[below[d]])) below[d] = static_cast<int>(a);
        if (q[a] > q[d] && (above[d] < 0 || q[a] < q[above[d]])) above[d] = static_cast<int>(a);
      }
    }
  }
};

class OccurrenceSearch {
 public:
  OccurrenceSearch(std::span<const int> seq, std::span<const int> q, bool pin_last)
      : seq_(seq), q_(q), neighbours_(q), images_(q.size()), pin_last_(pin_last) {}

  bool run() {
    if (q_.size() > seq_.size()) return false;
    return extend(0, 0);
  }

 private:
  bool extend(std::size_t depth, std::size_t start) {
    const std::size_t k = q_.size();
    if (depth == k) return true;
    const int lo = neighbours_.below[depth] < 0 ? std::numeric_limits<int>::min()
                                                : images_[neighbours_.below[depth]];
    const int hi = neighbours_.above[depth] < 0 ? std::numeric_limits<int>::max()
                                                : images_[neighbours_.above[depth]];
    const std::size_t n = seq_.size();
    const std::size_t last = n - (k - depth);  // leave room for the remaining entries
    if (pin_last_ && depth + 1 == k) start = n - 1;
    for (std::size_t j = start; j <= last; ++j) {
      const int v = seq_[j];
      if (v <= lo || v >= hi) continue;
      images_[depth] = v;
      if (extend(depth + 1, j + 1)) return true;
    }
    return false;
  }

  std::span<const int> seq_;
  std::span<const int> q_;
  PatternNeighbours neighbours_;
  std::vector<int> images_;
  bool pin_last_;
};

}  // namespace

bool contains(std::span<const int> sequence, const Permutation& q) {
  return OccurrenceSearch(sequence, q.entries(), false).run();
}

bool contains(const Permutation& p, const Permutation& q) { return contains(p.entries(), q); }

bool completes_occurrence(std::span<const int> sequence, const Permutation& q) {
  if (sequence.empty()) return false;
  return OccurrenceSearch(sequence, q.entries(), true).run();
}

std::vector<Extremum> ltr_minima(std::span<const int> sequence) {
  std::vector<Extremum> out;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] < best) {
      best = sequence[i];
      out.push_back({i + 1, best});
    }
  }
  return out;
}

std::vector<Extremum> rtl_maxima(std::span<const int> sequence) {
  std::vector<Extremum> out;
  int best = std::numeric_limits<int>::min();
  for (std::size_t i = sequence.size(); i-- > 0;) {
    if (sequence[i] > best) {
      best = sequence[i];
      out.push_back({i + 1, best});
    }
  }
  return {out.rbegin(), out.rend()};
}

std::vector<Extremum> ltr_minima(const Permutation& p) { return ltr_minima(p.entries()); }
std::vector<Extremum> rtl_maxima(const Permutation& p) { return rtl_maxima(p.entries()); }

}  // namespace avoid1324
