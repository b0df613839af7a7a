#include "avoid1324/type_word.hpp"

#include <stdexcept>

namespace avoid1324 {

char to_char(Mark m) { return static_cast<char>('A' + static_cast<int>(m)); }

Mark mark_from_char(char c) {
  if (c < 'A' || c > 'D') throw std::invalid_argument(std::string("not a type letter: '") + c + "'");
  return static_cast<Mark>(c - 'A');
}

TypeWord TypeWord::parse(std::string_view text) {
  std::vector<Mark> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(mark_from_char(c));
  return TypeWord(std::move(letters));
}

std::array<std::size_t, 4> TypeWord::letter_counts() const {
  std::array<std::size_t, 4> counts{};
  for (Mark m : letters_) ++counts[static_cast<std::size_t>(m)];
  return counts;
}

std::string TypeWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Mark m : letters_) out.push_back(to_char(m));
  return out;
}

}  // namespace avoid1324
