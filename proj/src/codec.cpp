#include "avoid1324/codec.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "avoid1324/coloring.hpp"
#include "avoid1324/containment.hpp"

namespace avoid1324 {

namespace {

const Permutation kPattern1324{1, 3, 2, 4};
const Permutation kPattern132{1, 3, 2};
const Permutation kPattern213{2, 1, 3};

DecodeFailure fail(FailureStage stage, std::string detail) { return {stage, std::move(detail)}; }

std::size_t index(Mark m) { return static_cast<std::size_t>(m); }

}  // namespace

const char* to_string(FailureStage stage) {
  switch (stage) {
    case FailureStage::Shape: return "shape";
    case FailureStage::Greedy: return "greedy";
    case FailureStage::Verification: return "verification";
  }
  return "unknown";
}

CodePair encode(const Permutation& p) {
  const auto cp = color(p);
  return {position_word(cp), value_word(cp)};
}

Outcome<Permutation> decode(const CodePair& code, const DecodeOptions& options) {
  const std::size_t n = code.w.size();
  if (n == 0) return fail(FailureStage::Shape, "empty code pair");
  if (code.z.size() != n) return fail(FailureStage::Shape, "w and z differ in length");
  if (code.w.letter_counts() != code.z.letter_counts())
    return fail(FailureStage::Shape, "w and z have different letter multisets");

  // 1-based positions (from w) and values (from z) of each type, both increasing.
  std::array<std::vector<int>, 4> positions, values;
  for (std::size_t i = 0; i < n; ++i) {
    positions[index(code.w[i])].push_back(static_cast<int>(i + 1));
    values[index(code.z[i])].push_back(static_cast<int>(i + 1));
  }

  std::vector<int> entries(n + 1, 0);  // 1-based; 0 = unfilled
  for (Mark m : {Mark::A, Mark::D}) {
    const auto& pos = positions[index(m)];
    const auto& val = values[index(m)];
    for (std::size_t k = 0; k < pos.size(); ++k) entries[pos[k]] = val[val.size() - 1 - k];
  }

  std::set<int> free_b(values[index(Mark::B)].begin(), values[index(Mark::B)].end());
  int nearest_a = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const Mark m = code.w[i - 1];
    if (m == Mark::A) nearest_a = entries[i];
    if (m != Mark::B) continue;
    if (nearest_a == 0)
      return fail(FailureStage::Greedy, "B at position " + std::to_string(i) + " has no A on its left");
    auto it = free_b.upper_bound(nearest_a);
    if (it == free_b.end())
      return fail(FailureStage::Greedy, "no B value above " + std::to_string(nearest_a) +
                                            " for position " + std::to_string(i));
    entries[i] = *it;
    free_b.erase(it);
  }

  std::set<int> free_c(values[index(Mark::C)].begin(), values[index(Mark::C)].end());
  int nearest_d = 0;
  for (std::size_t i = n; i >= 1; --i) {
    const Mark m = code.w[i - 1];
    if (m == Mark::D) nearest_d = entries[i];
    if (m != Mark::C) continue;
    if (nearest_d == 0)
      return fail(FailureStage::Greedy, "C at position " + std::to_string(i) + " has no D on its right");
    auto it = free_c.lower_bound(nearest_d);
    if (it == free_c.begin())
      return fail(FailureStage::Greedy, "no C value below " + std::to_string(nearest_d) +
                                            " for position " + std::to_string(i));
    --it;
    entries[i] = *it;
    free_c.erase(it);
  }

  Permutation candidate(std::vector<int>(entries.begin() + 1, entries.end()));
  if (!options.verify) return candidate;
  if (contains(candidate, kPattern1324))
    return fail(FailureStage::Verification, "candidate " + candidate.to_string() + " contains 1324");
  if (encode(candidate) != code)
    return fail(FailureStage::Verification,
                "candidate " + candidate.to_string() + " encodes to a different pair");
  return candidate;
}

std::string BinaryWord::to_string() const {
  std::string out;
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

std::pair<BinaryWord, BinaryWord> uv_encode_132(const Permutation& p) {
  if (contains(p, kPattern132)) throw std::invalid_argument(p.to_string() + " contains 132");
  std::vector<bool> u(p.size(), true), v(p.size(), true);
  for (const auto& m : ltr_minima(p)) {
    u[m.position - 1] = false;
    v[m.value - 1] = false;
  }
  return {BinaryWord(std::move(u)), BinaryWord(std::move(v))};
}

namespace {

// Sorted, duplicate-free, within 1..n, containing 1.
bool valid_index_set(std::vector<int>& set, std::size_t n) {
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) return false;
  if (set.empty() || set.front() != 1 || set.back() > static_cast<int>(n)) return false;
  return true;
}

std::vector<int> values_of(const std::vector<Extremum>& extrema) {
  std::vector<int> out;
  for (const auto& e : extrema) out.push_back(e.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> positions_of(const std::vector<Extremum>& extrema) {
  std::vector<int> out;
  for (const auto& e : extrema) out.push_back(static_cast<int>(e.position));
  return out;
}

}  // namespace

Outcome<Permutation> reconstruct_132(std::vector<int> minima_values, std::vector<int> minima_positions,
                                     std::size_t n) {
  if (n == 0) return fail(FailureStage::Shape, "length must be at least 1");
  if (minima_values.size() != minima_positions.size())
    return fail(FailureStage::Shape, "different numbers of minima values and positions");
  if (!valid_index_set(minima_values, n) || !valid_index_set(minima_positions, n))
    return fail(FailureStage::Shape, "minima sets must be distinct, within 1..n and contain 1");

  std::vector<int> entries(n + 1, 0);
  for (std::size_t k = 0; k < minima_positions.size(); ++k)
    entries[minima_positions[k]] = minima_values[minima_values.size() - 1 - k];

  std::set<int> free;
  for (int v = 1; v <= static_cast<int>(n); ++v)
    if (!std::binary_search(minima_values.begin(), minima_values.end(), v)) free.insert(v);

  int nearest_minimum = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (entries[i] != 0) {
      nearest_minimum = entries[i];
      continue;
    }
    auto it = free.upper_bound(nearest_minimum);
    if (it == free.end())
      return fail(FailureStage::Greedy, "no value above " + std::to_string(nearest_minimum) +
                                            " for position " + std::to_string(i));
    entries[i] = *it;
    free.erase(it);
  }

  Permutation candidate(std::vector<int>(entries.begin() + 1, entries.end()));
  const auto minima = ltr_minima(candidate);
  if (contains(candidate, kPattern132) || values_of(minima) != minima_values ||
      positions_of(minima) != minima_positions)
    return fail(FailureStage::Verification, "candidate " + candidate.to_string() +
                                                " does not have the requested minima");
  return candidate;
}

Outcome<Permutation> reconstruct_213(std::vector<int> maxima_values, std::vector<int> maxima_positions,
                                     std::size_t n) {
  const int flip = static_cast<int>(n) + 1;
  std::vector<int> mirrored_values, mirrored_positions;
  for (int v : maxima_values) mirrored_values.push_back(flip - v);
  for (int i : maxima_positions) mirrored_positions.push_back(flip - i);

  auto mirrored = reconstruct_132(std::move(mirrored_values), std::move(mirrored_positions), n);
  if (!mirrored) return mirrored.failure();
  Permutation candidate = mirrored.value().reverse_complement();

  std::sort(maxima_values.begin(), maxima_values.end());
  std::sort(maxima_positions.begin(), maxima_positions.end());
  const auto maxima = rtl_maxima(candidate);
  if (contains(candidate, kPattern213) || values_of(maxima) != maxima_values ||
      positions_of(maxima) != maxima_positions)
    return fail(FailureStage::Verification, "candidate " + candidate.to_string() +
                                                " does not have the requested maxima");
  return candidate;
}

}  // namespace avoid1324
