#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <ranges>
#include <thread>
#include <vector>

#include "bigint.hpp"
#include "generate.hpp"
#include "word.hpp"

namespace dyck {

// Pattern order: p <= q iff p is a scattered subsequence of q's steps.
// Greedy leftmost matching decides it in one pass.
inline bool contains(const dyck_word& q, const dyck_word& p) {
  if (p.length() > q.length()) return false;
  std::size_t j = 0;
  for (step s : q) {
    if (j == p.length()) break;
    if (s == p[j]) ++j;
  }
  return j == p.length();
}

inline bool contains(packed_word q, packed_word p) noexcept {
  if (p.semilength > q.semilength) return false;
  const unsigned m = p.length();
  unsigned j = 0;
  for (int i = static_cast<int>(q.length()) - 1; i >= 0 && j < m; --i) {
    const std::uint64_t want = (p.bits >> (m - 1 - j)) & 1u;
    if (((q.bits >> i) & 1u) == want) ++j;
  }
  return j == m;
}

// Number of index subsets of q whose induced subsequence is p.
inline big_int count_occurrences(const dyck_word& q, const dyck_word& p) {
  const std::size_t m = p.length();
  if (m > q.length()) return 0;
  // ways[j]: embeddings of p[0..j) into the prefix of q scanned so far
  std::vector<big_int> ways(m + 1, 0);
  ways[0] = 1;
  for (step s : q) {
    for (std::size_t j = m; j > 0; --j)
      if (p[j - 1] == s) ways[j] += ways[j - 1];
  }
  return ways[m];
}

// Words of semilength n avoiding p, streamed in generation order.
inline auto avoiders(std::size_t n, dyck_word p, std::size_t cap = default_generation_cap) {
  return generate_all(n, cap) |
         std::views::filter([p = std::move(p)](const dyck_word& w) { return !contains(w, p); });
}

struct brute_options {
  std::size_t cap = default_generation_cap;
  // 0 picks hardware concurrency; 1 is a plain sequential scan.
  unsigned threads = 1;
};

namespace detail {

inline std::uint64_t count_avoiders_packed_seq(unsigned n, packed_word p) {
  std::uint64_t count = 0;
  for_each_packed(n, [&](packed_word q) { count += !contains(q, p); });
  return count;
}

inline std::uint64_t count_avoiders_packed_par(unsigned n, packed_word p, unsigned threads) {
  const unsigned depth = std::min(2 * n, 12u);
  const auto prefixes = packed_prefixes(n, depth);
  std::atomic<std::size_t> next{0};
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned t) {
    std::uint64_t local = 0;
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      for_each_packed_from(n, prefixes[i], [&](packed_word q) { local += !contains(q, p); });
    }
    partial[t] = local;
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  pool.clear();
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace detail

/**
 * d_n(p): exhaustive count of semilength-n words avoiding p. Every closed form
 * in the library is checked against this.
 */
inline big_int count_avoiders_brute(std::size_t n, const dyck_word& p, brute_options opt = {}) {
  check_cap(n, opt.cap);
  const auto pp = pack(p);
  if (n > packed_word::max_semilength || !pp) {
    big_int count = 0;
    for (const auto& w : avoiders(n, p, opt.cap)) {
      (void)w;
      ++count;
    }
    return count;
  }
  unsigned threads = opt.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.threads;
  const auto un = static_cast<unsigned>(n);
  if (threads <= 1 || n < 8) return detail::count_avoiders_packed_seq(un, *pp);
  return detail::count_avoiders_packed_par(un, *pp, threads);
}

}  // namespace dyck
