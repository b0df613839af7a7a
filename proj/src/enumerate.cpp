#include "avoid1324/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "avoid1324/containment.hpp"

namespace avoid1324 {

namespace {

void check_limits(std::size_t n, const EnumerationLimits& limits) {
  if (n == 0) throw std::invalid_argument("permutation length must be at least 1");
  if (n > limits.max_length)
    throw LimitExceeded("length " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(limits.max_length));
}

// Depth-first extension of a q-avoiding prefix. Visitor receives the full
// one-line notation of each avoider.
template <typename Visitor>
class PrefixWalker {
 public:
  PrefixWalker(std::size_t n, const Permutation& q, Visitor& visit)
      : n_(n), q_(q), visit_(visit), used_(n + 1, false) {
    prefix_.reserve(n);
  }

  void walk_from(int first) {
    push(first);
    if (!completes_occurrence(prefix_, q_)) descend();
    pop();
  }

 private:
  void descend() {
    if (prefix_.size() == n_) {
      visit_(prefix_);
      return;
    }
    for (int v = 1; v <= static_cast<int>(n_); ++v) {
      if (used_[v]) continue;
      push(v);
      if (!completes_occurrence(prefix_, q_)) descend();
      pop();
    }
  }

  void push(int v) {
    prefix_.push_back(v);
    used_[v] = true;
  }
  void pop() {
    used_[prefix_.back()] = false;
    prefix_.pop_back();
  }

  std::size_t n_;
  const Permutation& q_;
  Visitor& visit_;
  std::vector<bool> used_;
  std::vector<int> prefix_;
};

template <typename Visitor>
void walk_subtree(std::size_t n, const Permutation& q, int first, Visitor& visit) {
  PrefixWalker<Visitor> walker(n, q, visit);
  walker.walk_from(first);
}

// Runs task(first) for first = 1..n on up to `jobs` threads.
template <typename Task>
void run_per_first_entry(std::size_t n, unsigned jobs, Task&& task) {
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (int first = 1; first <= static_cast<int>(n); ++first) task(first);
    return;
  }
  std::atomic<int> next{1};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int first = next++; first <= static_cast<int>(n); first = next++) task(first);
    });
  }
}

}  // namespace

void for_each_avoider(std::size_t n, const Permutation& q,
                      const std::function<void(const Permutation&)>& visit,
                      const EnumerationLimits& limits) {
  check_limits(n, limits);
  if (limits.jobs <= 1) {
    auto emit = [&](const std::vector<int>& entries) { visit(Permutation(entries)); };
    for (int first = 1; first <= static_cast<int>(n); ++first) walk_subtree(n, q, first, emit);
    return;
  }
  std::vector<std::vector<Permutation>> buckets(n);
  run_per_first_entry(n, limits.jobs, [&](int first) {
    auto& bucket = buckets[first - 1];
    auto collect = [&](const std::vector<int>& entries) { bucket.emplace_back(entries); };
    walk_subtree(n, q, first, collect);
  });
  for (const auto& bucket : buckets)
    for (const auto& p : bucket) visit(p);
}

std::vector<Permutation> enumerate_avoiders(std::size_t n, const Permutation& q,
                                            const EnumerationLimits& limits) {
  std::vector<Permutation> out;
  for_each_avoider(n, q, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

BigInt count_avoiders(std::size_t n, const Permutation& q, const EnumerationLimits& limits) {
  check_limits(n, limits);
  std::vector<unsigned long long> per_first(n, 0);
  run_per_first_entry(n, limits.jobs, [&](int first) {
    unsigned long long count = 0;
    auto tally = [&](const std::vector<int>&) { ++count; };
    walk_subtree(n, q, first, tally);
    per_first[first - 1] = count;
  });
  BigInt total = 0;
  for (auto c : per_first) total += c;
  return total;
}

BigInt catalan(std::size_t n) {
  BigInt binom = 1;  // binom(2n, k) built incrementally up to k = n
  for (std::size_t k = 1; k <= n; ++k) {
    binom *= (2 * n - k + 1);
    binom /= k;
  }
  return binom / (n + 1);
}

}  // namespace avoid1324
