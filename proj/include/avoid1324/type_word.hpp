#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace avoid1324 {

/// Entry type: A/B are red (LTR minimum / not), C/D are blue (not RTL maximum / RTL maximum).
enum class Mark : unsigned char { A, B, C, D };

inline constexpr std::array<Mark, 4> kMarks{Mark::A, Mark::B, Mark::C, Mark::D};

char to_char(Mark m);
Mark mark_from_char(char c);  // throws std::invalid_argument

/// A word over {A,B,C,D}; serialises as an uppercase string such as "ABABBCD".
class TypeWord {
 public:
  TypeWord() = default;
  explicit TypeWord(std::vector<Mark> letters) : letters_(std::move(letters)) {}

  static TypeWord parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Mark operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Mark>& letters() const { return letters_; }

  void push_back(Mark m) { letters_.push_back(m); }
  void pop_back() { letters_.pop_back(); }

  /// Letter multiplicities indexed by Mark.
  std::array<std::size_t, 4> letter_counts() const;

  std::string to_string() const;

  friend bool operator==(const TypeWord&, const TypeWord&) = default;
  friend auto operator<=>(const TypeWord&, const TypeWord&) = default;

 private:
  std::vector<Mark> letters_;
};

}  // namespace avoid1324
