#include "avoid1324/coloring.hpp"

#include <limits>
#include <stdexcept>

namespace avoid1324 {

ColoredPermutation::ColoredPermutation(Permutation base, std::vector<Mark> marks)
    : base_(std::move(base)), marks_(std::move(marks)) {
  if (marks_.size() != base_.size())
    throw std::invalid_argument("mark count differs from permutation length");
}

std::vector<int> ColoredPermutation::red_values() const {
  std::vector<int> out;
  for (std::size_t i = 1; i <= size(); ++i)
    if (color_at(i) == Color::Red) out.push_back(base_.at(i));
  return out;
}

std::vector<int> ColoredPermutation::blue_values() const {
  std::vector<int> out;
  for (std::size_t i = 1; i <= size(); ++i)
    if (color_at(i) == Color::Blue) out.push_back(base_.at(i));
  return out;
}

namespace {

// Red prefix state for the 132 test. For each red LTR minimum m (decreasing),
// the largest red entry after it; a new value v completes a red 132 iff it
// falls strictly inside one of the intervals (m, max_after).
class RedPrefix {
 public:
  bool would_complete_132(int v) const {
    for (const auto& [minimum, max_after] : intervals_)
      if (minimum < v && v < max_after) return true;
    return false;
  }

  void append(int v) {
    if (intervals_.empty() || v < intervals_.back().first) {
      intervals_.emplace_back(v, std::numeric_limits<int>::min());
      return;
    }
    for (auto& interval : intervals_)
      if (v > interval.second) interval.second = v;
  }

 private:
  std::vector<std::pair<int, int>> intervals_;
};

}  // namespace

ColoredPermutation color(const Permutation& p) {
  const std::size_t n = p.size();
  std::vector<Color> colors(n);
  RedPrefix red;
  int smallest_blue = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < n; ++i) {
    const int v = p.entries()[i];
    if (red.would_complete_132(v) || smallest_blue < v) {
      colors[i] = Color::Blue;
      smallest_blue = std::min(smallest_blue, v);
    } else {
      colors[i] = Color::Red;
      red.append(v);
    }
  }

  std::vector<Mark> marks(n);
  int red_min = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < n; ++i) {
    if (colors[i] != Color::Red) continue;
    const int v = p.entries()[i];
    marks[i] = v < red_min ? Mark::A : Mark::B;
    red_min = std::min(red_min, v);
  }
  int blue_max = std::numeric_limits<int>::min();
  for (std::size_t i = n; i-- > 0;) {
    if (colors[i] != Color::Blue) continue;
    const int v = p.entries()[i];
    marks[i] = v > blue_max ? Mark::D : Mark::C;
    blue_max = std::max(blue_max, v);
  }
  return ColoredPermutation(p, std::move(marks));
}

TypeWord position_word(const ColoredPermutation& cp) {
  std::vector<Mark> letters(cp.size());
  for (std::size_t i = 1; i <= cp.size(); ++i) letters[i - 1] = cp.mark_at(i);
  return TypeWord(std::move(letters));
}

TypeWord value_word(const ColoredPermutation& cp) {
  std::vector<Mark> letters(cp.size());
  for (std::size_t i = 1; i <= cp.size(); ++i) letters[cp.base().at(i) - 1] = cp.mark_at(i);
  return TypeWord(std::move(letters));
}

}  // namespace avoid1324
