#include "avoid1324/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace avoid1324 {

namespace {

void check_bijection(std::span<const int> entries) {
  const auto n = entries.size();
  if (n == 0) throw std::invalid_argument("permutation must have at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw std::invalid_argument("permutation entry " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[v]) throw std::invalid_argument("permutation entry " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::initializer_list<value_type> entries)
    : Permutation(std::vector<value_type>(entries)) {}

Permutation::Permutation(std::vector<value_type> entries) : entries_(std::move(entries)) {
  check_bijection(entries_);
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<value_type> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto token = text.substr(start, end - start);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      value_type v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("malformed permutation entry '" + std::string(token) + "'");
      values.push_back(v);
      start = end + 1;
    }
  } else {
    if (text.size() > 9)
      throw std::invalid_argument("contiguous permutation syntax only allowed for n <= 9");
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument(std::string("bad digit '") + c + "'");
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::standardize(std::span<const value_type> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<value_type> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<value_type>(r + 1);
  return Permutation(std::move(ranks));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
  std::vector<value_type> v(n);
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<value_type> inv(size());
  for (std::size_t i = 0; i < size(); ++i) inv[entries_[i] - 1] = static_cast<value_type>(i + 1);
  return Permutation(std::move(inv));
}

Permutation Permutation::reverse_complement() const {
  const auto n = static_cast<value_type>(size());
  std::vector<value_type> rc(size());
  for (std::size_t i = 0; i < size(); ++i) rc[size() - 1 - i] = n + 1 - entries_[i];
  return Permutation(std::move(rc));
}

std::string Permutation::to_string() const {
  if (size() > 9) return to_comma_string();
  std::string out;
  for (int v : entries_) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string Permutation::to_comma_string() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(entries_[i]);
  }
  return out;
}

}  // namespace avoid1324
