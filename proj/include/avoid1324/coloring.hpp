#pragma once

#include <vector>

#include "avoid1324/permutation.hpp"
#include "avoid1324/type_word.hpp"

namespace avoid1324 {

enum class Color : unsigned char { Red, Blue };

inline constexpr Color color_of(Mark m) {
  return (m == Mark::A || m == Mark::B) ? Color::Red : Color::Blue;
}

/// A permutation with the red/blue coloring and A/B/C/D marking attached.
/// Positions are 1-based, like Permutation::at.
class ColoredPermutation {
 public:
  ColoredPermutation(Permutation base, std::vector<Mark> marks);

  const Permutation& base() const { return base_; }
  std::size_t size() const { return base_.size(); }

  Mark mark_at(std::size_t position) const { return marks_[position - 1]; }
  Color color_at(std::size_t position) const { return color_of(marks_[position - 1]); }

  /// Values of the red (resp. blue) entries in position order.
  std::vector<int> red_values() const;
  std::vector<int> blue_values() const;

 private:
  Permutation base_;
  std::vector<Mark> marks_;
};

/// Colors entries left to right: p_i turns blue when making it red would
/// complete a red 132, or when a smaller blue entry already exists; otherwise
/// it is red. A second pass marks red LTR minima (of the red subsequence) A,
/// other reds B, blue RTL maxima (of the blue subsequence) D, other blues C.
/// Total on all permutations.
ColoredPermutation color(const Permutation& p);

/// w(p): letter i is the mark of p_i.
TypeWord position_word(const ColoredPermutation& cp);
/// z(p): letter i is the mark of the entry with value i.
TypeWord value_word(const ColoredPermutation& cp);

}  // namespace avoid1324
