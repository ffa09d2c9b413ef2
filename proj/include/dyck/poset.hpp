#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "generate.hpp"
#include "pattern.hpp"
#include "word.hpp"

namespace dyck {

// Rank is semilength, so p is covered by q exactly when p <= q one rank down.
inline bool covers(const dyck_word& q, const dyck_word& p) {
  return p.semilength() + 1 == q.semilength() && contains(q, p);
}

/**
 * Number of words covered by q, from its factor ascent counts n_i:
 *   (sum n_i^2 + (sum n_i)^2) / 2 - |UDU| - |DUD|
 */
inline big_int covered_count(const dyck_word& q) {
  if (q.empty()) throw error("covered_count: the empty path covers nothing");
  const auto dec = factorize(q);
  const auto st = statistics(q);
  big_int squares = 0;
  big_int total = 0;
  for (const auto& f : dec.factors) {
    squares += big_int(f.ascents) * f.ascents;
    total += f.ascents;
  }
  return (squares + total * total) / 2 - st.udu - st.dud;
}

/**
 * Number of words covering q, from its factor semilengths f_i:
 *   1 + sum f_i^2 + sum_{i<j} f_i f_j
 */
inline big_int covering_count(const dyck_word& q) {
  const auto dec = factorize(q);
  big_int result = 1;
  big_int prefix = 0;
  for (const auto& f : dec.factors) {
    result += big_int(f.semilength) * f.semilength + prefix * f.semilength;
    prefix += f.semilength;
  }
  return result;
}

// Every distinct Dyck word left after deleting one U and one D, sorted.
inline std::vector<dyck_word> covered_set(const dyck_word& q) {
  const auto s = q.steps();
  std::vector<dyck_word> out;
  std::vector<step> buf;
  buf.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != step::up) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] != step::down) continue;
      buf.clear();
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != i && t != j) buf.push_back(s[t]);
      if (dyck_word::is_dyck(buf)) out.push_back(dyck_word::from_valid(buf));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Every distinct Dyck word obtained by inserting one U and one D, sorted.
inline std::vector<dyck_word> covering_set(const dyck_word& q) {
  const auto s = q.steps();
  const std::size_t len = s.size() + 2;
  std::vector<dyck_word> out;
  std::vector<step> buf(len);
  // u and d are the final positions of the inserted steps
  for (std::size_t u = 0; u < len; ++u) {
    for (std::size_t d = 0; d < len; ++d) {
      if (u == d) continue;
      std::size_t src = 0;
      for (std::size_t t = 0; t < len; ++t) {
        if (t == u) buf[t] = step::up;
        else if (t == d) buf[t] = step::down;
        else buf[t] = s[src++];
      }
      if (dyck_word::is_dyck(buf)) out.push_back(dyck_word::from_valid(buf));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/**
 * The interval [bottom, top] of the pattern poset as a rank-layered Hasse
 * diagram. Nodes are stored layer by layer (rank ascending, U<D order within
 * a layer); edges are index pairs (lower, upper) into `nodes`.
 */
struct hasse_interval {
  dyck_word bottom;
  dyck_word top;
  std::vector<dyck_word> nodes;
  std::vector<std::size_t> layer_begin;  // one entry per layer plus an end marker
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;

  std::size_t layer_count() const noexcept { return layer_begin.empty() ? 0 : layer_begin.size() - 1; }

  std::span<const dyck_word> layer(std::size_t r) const {
    return std::span<const dyck_word>(nodes).subspan(layer_begin[r], layer_begin[r + 1] - layer_begin[r]);
  }

  std::size_t rank_of(std::size_t node) const {
    return nodes[node].semilength() - bottom.semilength();
  }

  std::size_t index_of(const dyck_word& w) const {
    if (w.semilength() < bottom.semilength() || w.semilength() > top.semilength()) return nodes.size();
    const std::size_t r = w.semilength() - bottom.semilength();
    auto first = nodes.begin() + static_cast<std::ptrdiff_t>(layer_begin[r]);
    auto last = nodes.begin() + static_cast<std::ptrdiff_t>(layer_begin[r + 1]);
    auto it = std::lower_bound(first, last, w);
    return it != last && *it == w ? static_cast<std::size_t>(it - nodes.begin()) : nodes.size();
  }
};

inline void require_ordered(const dyck_word& bottom, const dyck_word& top) {
  if (!contains(top, bottom))
    throw not_ordered(render(bottom) + " is not a pattern of " + render(top));
}

// Layers come from filtering full generation levels; edges from the cover test.
inline hasse_interval interval(const dyck_word& bottom, const dyck_word& top,
                               std::size_t cap = default_generation_cap) {
  require_ordered(bottom, top);
  check_cap(top.semilength(), cap);

  hasse_interval iv{bottom, top, {}, {}, {}};
  for (std::size_t m = bottom.semilength(); m <= top.semilength(); ++m) {
    iv.layer_begin.push_back(iv.nodes.size());
    if (m == bottom.semilength()) {
      iv.nodes.push_back(bottom);
      continue;
    }
    if (m == top.semilength()) {
      iv.nodes.push_back(top);
      continue;
    }
    for (const auto& w : generate_all(m, cap))
      if (contains(top, w) && contains(w, bottom)) iv.nodes.push_back(w);
  }
  iv.layer_begin.push_back(iv.nodes.size());

  for (std::size_t r = 0; r + 1 < iv.layer_count(); ++r) {
    for (std::size_t lo = iv.layer_begin[r]; lo < iv.layer_begin[r + 1]; ++lo)
      for (std::size_t hi = iv.layer_begin[r + 1]; hi < iv.layer_begin[r + 2]; ++hi)
        if (contains(iv.nodes[hi], iv.nodes[lo])) iv.cover_edges.emplace_back(lo, hi);
  }
  return iv;
}

// mu(bottom, node) for every node of the interval, aligned with iv.nodes.
inline std::vector<big_int> mobius_values(const hasse_interval& iv) {
  std::vector<big_int> mu(iv.nodes.size(), 0);
  if (iv.nodes.empty()) return mu;
  mu[0] = 1;
  for (std::size_t z = 1; z < iv.nodes.size(); ++z) {
    big_int sum = 0;
    for (std::size_t r = 0; r < iv.layer_begin[iv.rank_of(z)]; ++r)
      if (contains(iv.nodes[z], iv.nodes[r])) sum += mu[r];
    mu[z] = -sum;
  }
  return mu;
}

/**
 * mu(bottom, .) for a fixed bottom, memoized by upper endpoint across calls.
 * Values are written once; concurrent callers may race to fill the same
 * entry, but they always compute the same value.
 */
class mobius_function {
 public:
  explicit mobius_function(dyck_word bottom, std::size_t cap = default_generation_cap)
      : bottom_(std::move(bottom)), cap_(cap) {}

  const dyck_word& bottom() const noexcept { return bottom_; }

  big_int operator()(const dyck_word& top) const {
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(top); it != memo_.end()) return it->second;
    }
    const auto iv = interval(bottom_, top, cap_);
    std::vector<big_int> mu(iv.nodes.size(), 0);
    // mu(bottom, z) depends only on [bottom, z], so values memoized while
    // evaluating other tops are reused as-is.
    std::vector<bool> known(iv.nodes.size(), false);
    {
      std::lock_guard lock(mutex_);
      for (std::size_t z = 0; z < iv.nodes.size(); ++z) {
        if (auto it = memo_.find(iv.nodes[z]); it != memo_.end()) {
          mu[z] = it->second;
          known[z] = true;
        }
      }
    }
    for (std::size_t z = 0; z < iv.nodes.size(); ++z) {
      if (known[z]) continue;
      if (z == 0) {
        mu[z] = 1;
        continue;
      }
      big_int sum = 0;
      for (std::size_t r = 0; r < iv.layer_begin[iv.rank_of(z)]; ++r)
        if (contains(iv.nodes[z], iv.nodes[r])) sum += mu[r];
      mu[z] = -sum;
    }
    std::lock_guard lock(mutex_);
    for (std::size_t z = 0; z < iv.nodes.size(); ++z) memo_.try_emplace(iv.nodes[z], mu[z]);
    return mu.back();
  }

  std::size_t memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

 private:
  dyck_word bottom_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable std::map<dyck_word, big_int> memo_;
};

inline big_int mobius(const dyck_word& bottom, const dyck_word& top,
                      std::size_t cap = default_generation_cap) {
  return mobius_function(bottom, cap)(top);
}

// Maximal chains bottom = x0 < x1 < ... < xr = top through cover relations.
inline big_int saturated_chain_count(const hasse_interval& iv) {
  std::vector<big_int> ways(iv.nodes.size(), 0);
  if (iv.nodes.empty()) return 0;
  ways[0] = 1;
  // edges are emitted in lower-layer order, so one pass suffices
  for (const auto& [lo, hi] : iv.cover_edges) ways[hi] += ways[lo];
  return ways.back();
}

inline big_int saturated_chain_count(const dyck_word& bottom, const dyck_word& top,
                                     std::size_t cap = default_generation_cap) {
  return saturated_chain_count(interval(bottom, top, cap));
}

}  // namespace dyck
