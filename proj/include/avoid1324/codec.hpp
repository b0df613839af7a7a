#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "avoid1324/permutation.hpp"
#include "avoid1324/type_word.hpp"

namespace avoid1324 {

/// The pair (w(p), z(p)).
struct CodePair {
  TypeWord w;
  TypeWord z;
  friend bool operator==(const CodePair&, const CodePair&) = default;
  friend auto operator<=>(const CodePair&, const CodePair&) = default;
};

/// Where a decoder rejected its input.
enum class FailureStage {
  Shape,         // lengths or letter multisets inconsistent, or preconditions unmet
  Greedy,        // the greedy fill had no admissible value or anchor
  Verification,  // a candidate was built but does not reproduce the input
};

const char* to_string(FailureStage stage);

struct DecodeFailure {
  FailureStage stage;
  std::string detail;
};

/// Either a value or a DecodeFailure. Inputs outside the image of an encoder
/// are expected, so decoders report them here instead of throwing.
template <typename T>
class Outcome {
 public:
  Outcome(T value) : state_(std::move(value)) {}
  Outcome(DecodeFailure failure) : state_(std::move(failure)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const { return std::get<T>(state_); }
  const DecodeFailure& failure() const { return std::get<DecodeFailure>(state_); }

 private:
  std::variant<T, DecodeFailure> state_;
};

CodePair encode(const Permutation& p);

struct DecodeOptions {
  /// When false the greedy candidate is returned unchecked. Benchmarking only.
  bool verify = true;
};

/// Rebuilds the unique 1324-avoider with the given code pair. A and D values
/// go into their positions in decreasing order; B positions are filled left to
/// right with the smallest unused B value above the nearest A to the left; C
/// positions right to left with the largest unused C value below the nearest
/// D to the right. The candidate must avoid 1324 and re-encode to `code`.
Outcome<Permutation> decode(const CodePair& code, const DecodeOptions& options = {});

/// Binary word over {0,1}; 0 marks a left-to-right minimum.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<bool> bits) : bits_(std::move(bits)) {}

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<bool> bits_;
};

/// (u(p), v(p)) for a 132-avoider: u by position, v by value.
/// Throws std::invalid_argument if p contains 132.
std::pair<BinaryWord, BinaryWord> uv_encode_132(const Permutation& p);

/// The 132-avoider of length n whose LTR minima are exactly the given values at
/// the given (1-based) positions. Non-minimum positions are filled left to right
/// with the smallest unused value above the nearest minimum to the left.
Outcome<Permutation> reconstruct_132(std::vector<int> minima_values, std::vector<int> minima_positions,
                                     std::size_t n);

/// The 213-avoider with the given RTL maxima, obtained from reconstruct_132 by
/// reverse-complement.
Outcome<Permutation> reconstruct_213(std::vector<int> maxima_values, std::vector<int> maxima_positions,
                                     std::size_t n);

}  // namespace avoid1324
