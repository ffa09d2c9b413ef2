#pragma once

#include <cstddef>
#include <vector>

#include "bigint.hpp"

namespace dyck {

// Zero outside 0 <= k <= n, including negative arguments.
inline big_int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  big_int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline big_int catalan(std::size_t n) {
  const auto ln = static_cast<long>(n);
  return binomial(2 * ln, ln) / (ln + 1);
}

// Dyck words of semilength n with exactly k peaks.
inline big_int narayana(std::size_t n, std::size_t k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0 || k > n) return 0;
  const auto ln = static_cast<long>(n);
  const auto lk = static_cast<long>(k);
  return binomial(ln, lk) * binomial(ln, lk - 1) / ln;
}

// Dyck prefixes with i U steps and j D steps, (i-j+1)/(i+1) * C(i+j, j).
// Zero unless 0 <= j <= i.
inline big_int ballot(long i, long j) {
  if (j < 0 || j > i) return 0;
  return binomial(i + j, j) * (i - j + 1) / (i + 1);
}

/**
 * Ballot numbers b(i, j) for 0 <= j <= i <= cap, built from
 * b(i+1, j) = sum_{s<=j} b(i, s). extend() only appends rows, so entries
 * already handed out never change.
 */
class ballot_table {
 public:
  explicit ballot_table(std::size_t cap) { extend(cap); }

  void extend(std::size_t cap) {
    if (rows_.empty()) rows_.push_back({big_int(1)});
    while (rows_.size() <= cap) {
      const auto& prev = rows_.back();
      std::vector<big_int> row(prev.size() + 1);
      big_int running = 0;
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j < prev.size()) running += prev[j];
        row[j] = running;
      }
      rows_.push_back(std::move(row));
    }
  }

  std::size_t cap() const noexcept { return rows_.size() - 1; }

  big_int operator()(long i, long j) const {
    if (i < 0 || j < 0 || j > i) return 0;
    return rows_.at(static_cast<std::size_t>(i))[static_cast<std::size_t>(j)];
  }

 private:
  std::vector<std::vector<big_int>> rows_;
};

}  // namespace dyck
