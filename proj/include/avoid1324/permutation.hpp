#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoid1324 {

/// A permutation of {1..n} in one-line notation, n >= 1.
///
/// Construction validates the bijection invariant and throws
/// std::invalid_argument otherwise. Patterns use the same type.
class Permutation {
 public:
  using value_type = int;

  Permutation(std::initializer_list<value_type> entries);
  explicit Permutation(std::vector<value_type> entries);

  /// Parses "3,6,1,2" or, for n <= 9, the contiguous form "3612".
  static Permutation parse(std::string_view text);

  /// Order-isomorphic reduction of an arbitrary sequence of distinct values.
  static Permutation standardize(std::span<const value_type> values);

  static Permutation identity(std::size_t n);
  static Permutation decreasing(std::size_t n);

  std::size_t size() const { return entries_.size(); }

  /// 1-based access: at(i) is p_i.
  value_type at(std::size_t position) const { return entries_[position - 1]; }

  /// 0-based view of the one-line notation.
  std::span<const value_type> entries() const { return entries_; }

  /// inverse().at(v) is the position holding value v.
  Permutation inverse() const;

  /// p'_i = n+1 - p_{n+1-i}; exchanges 132 with 213 and LTR minima with RTL maxima.
  Permutation reverse_complement() const;

  /// Contiguous digits when n <= 9, comma separated otherwise.
  std::string to_string() const;
  std::string to_comma_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<value_type> entries_;
};

}  // namespace avoid1324
