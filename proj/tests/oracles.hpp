#pragma once

// Test-only reference implementations. They work on plain strings and share
// no code with the library, so they can be used to check it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline bool is_dyck(const std::string& s) {
  int h = 0;
  for (char c : s) {
    h += c == 'U' ? 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

// Every U/D string of length 2n, filtered; sorted with U < D.
inline std::vector<std::string> dyck_words(int n) {
  std::vector<std::string> out;
  const int len = 2 * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::string s(len, 'U');
    for (int i = 0; i < len; ++i)
      if (mask >> (len - 1 - i) & 1u) s[i] = 'D';
    if (is_dyck(s)) out.push_back(s);
  }
  return out;
}

// Explicit enumeration of index subsets of q of size |p|.
inline long long occurrences_by_subsets(const std::string& q, const std::string& p) {
  const int m = static_cast<int>(p.size());
  const int len = static_cast<int>(q.size());
  if (m > len) return 0;
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  long long count = 0;
  while (true) {
    bool ok = true;
    for (int t = 0; t < m && ok; ++t) ok = q[idx[t]] == p[t];
    count += ok;
    int t = m - 1;
    while (t >= 0 && idx[t] == len - m + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int u = t + 1; u < m; ++u) idx[u] = idx[u - 1] + 1;
  }
  return count;
}

// Subsequence test by exhaustive memoized search over (i, j).
inline bool is_subsequence(const std::string& q, const std::string& p) {
  std::map<std::pair<std::size_t, std::size_t>, bool> memo;
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> bool {
    if (j == p.size()) return true;
    if (q.size() - i < p.size() - j) return false;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool r = go(i + 1, j) || (q[i] == p[j] && go(i + 1, j + 1));
    memo[key] = r;
    return r;
  };
  return go(0, 0);
}

// All distinct Dyck words from deleting one U and one D.
inline std::set<std::string> deletions(const std::string& q) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[i] != 'U' || q[j] != 'D') continue;
      std::string s;
      for (std::size_t t = 0; t < q.size(); ++t)
        if (t != i && t != j) s += q[t];
      if (is_dyck(s)) out.insert(s);
    }
  return out;
}

// All distinct Dyck words from inserting one U and one D.
inline std::set<std::string> insertions(const std::string& q) {
  std::set<std::string> out;
  for (std::size_t i = 0; i <= q.size(); ++i) {
    std::string a = q.substr(0, i) + "U" + q.substr(i);
    for (std::size_t j = 0; j <= a.size(); ++j) {
      std::string b = a.substr(0, j) + "D" + a.substr(j);
      if (is_dyck(b)) out.insert(b);
    }
  }
  return out;
}

inline int peaks(const std::string& s) {
  int c = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) c += s[i] == 'U' && s[i + 1] == 'D';
  return c;
}

// Brute d_n(p) via subset-free subsequence search.
inline long long avoiders(int n, const std::string& p) {
  long long c = 0;
  for (const auto& w : dyck_words(n)) c += !is_subsequence(w, p);
  return c;
}

// Number of fillings of the shape by 1..N increasing along rows and columns.
inline long long standard_fillings(const std::vector<int>& shape) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  std::vector<int> perm(cells.size());
  std::iota(perm.begin(), perm.end(), 1);
  long long count = 0;
  do {
    std::map<std::pair<int, int>, int> at;
    for (std::size_t i = 0; i < cells.size(); ++i) at[cells[i]] = perm[i];
    bool ok = true;
    for (auto [r, c] : cells) {
      if (c > 0 && at[{r, c - 1}] > at[{r, c}]) ok = false;
      if (r > 0 && at[{r - 1, c}] > at[{r, c}]) ok = false;
    }
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Every maximal DU -> UD flip sequence up to U^x D^x, walked one by one.
inline long long flip_chains(const std::string& p) {
  long long total = 0;
  bool any = false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] == 'D' && p[i + 1] == 'U') {
      any = true;
      std::string q = p;
      q[i] = 'U';
      q[i + 1] = 'D';
      total += flip_chains(q);
    }
  }
  return any ? total : 1;
}

// Minimum number of flips to reach U^x D^x: the area gap divided by 2.
inline int area_gap(const std::string& p) {
  const int x = static_cast<int>(p.size() / 2);
  int area = 0, h = 0, top = 0;
  for (char c : p) {
    int nh = h + (c == 'U' ? 1 : -1);
    area += h + nh;
    h = nh;
  }
  h = 0;
  for (int i = 0; i < 2 * x; ++i) {
    int nh = h + (i < x ? 1 : -1);
    top += h + nh;
    h = nh;
  }
  return (top - area) / 4;
}

// Philip Hall: mu(b, t) = sum over chains b = c0 < ... < cr = t of (-1)^r.
inline long long hall_mobius(const std::string& b, const std::string& t) {
  if (b == t) return 1;
  std::vector<std::string> between;
  for (int m = static_cast<int>(b.size() / 2); m <= static_cast<int>(t.size() / 2); ++m)
    for (const auto& w : dyck_words(m))
      if (is_subsequence(t, w) && is_subsequence(w, b)) between.push_back(w);
  std::function<long long(const std::string&)> from = [&](const std::string& c) -> long long {
    if (c == t) return 1;
    long long s = 0;
    for (const auto& d : between)
      if (d != c && d.size() > c.size() && is_subsequence(d, c)) s -= from(d);
    return s;
  };
  return from(b);
}

}  // namespace oracle
