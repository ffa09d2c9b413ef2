#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace dyck {

// C_20 is about 6.6e9; anything above is refused unless the caller raises the cap.
inline constexpr std::size_t default_generation_cap = 20;

inline void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw cap_exceeded(n, cap);
}

namespace detail {

// Lexicographic successor (U < D) among words of the same semilength.
// Returns false when `s` is already the last word, U D U D ... U D.
inline bool next_word(std::vector<step>& s) {
  const std::size_t len = s.size();
  const std::size_t n = len / 2;
  // heights[i] is the height before position i; ups[i] the U count before i.
  std::vector<long> height(len + 1, 0);
  std::vector<std::size_t> ups(len + 1, 0);
  for (std::size_t i = 0; i < len; ++i) {
    height[i + 1] = height[i] + (s[i] == step::up ? 1 : -1);
    ups[i + 1] = ups[i] + (s[i] == step::up ? 1 : 0);
  }
  for (std::size_t i = len; i-- > 0;) {
    if (s[i] != step::up || height[i] < 1) continue;
    s[i] = step::down;
    std::size_t remaining_ups = n - ups[i];
    for (std::size_t j = i + 1; j < len; ++j) {
      if (remaining_ups > 0) {
        s[j] = step::up;
        --remaining_ups;
      } else {
        s[j] = step::down;
      }
    }
    return true;
  }
  return false;
}

}  // namespace detail

/**
 * Lazy sequence of every Dyck word of semilength n, in U<D lexicographic order.
 * Memory use is one word; each increment is linear in the word length.
 */
class word_sequence : public std::ranges::view_interface<word_sequence> {
 public:
  class iterator {
   public:
    using value_type = dyck_word;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(std::size_t n) {
      std::vector<step> s(n, step::up);
      s.insert(s.end(), n, step::down);
      current_ = dyck_word::from_valid(std::move(s));
      done_ = false;
    }

    const dyck_word& operator*() const { return current_; }
    const dyck_word* operator->() const { return &current_; }

    iterator& operator++() {
      std::vector<step> s(current_.begin(), current_.end());
      if (detail::next_word(s)) current_ = dyck_word::from_valid(std::move(s));
      else done_ = true;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.current_ == b.current_;
    }
    friend bool operator==(const iterator& a, std::default_sentinel_t) { return a.done_; }

   private:
    dyck_word current_;
    bool done_ = true;
  };

  word_sequence() = default;
  explicit word_sequence(std::size_t n) : n_(n) {}

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

  std::size_t semilength() const noexcept { return n_; }

 private:
  std::size_t n_ = 0;
};

inline word_sequence generate_all(std::size_t n, std::size_t cap = default_generation_cap) {
  check_cap(n, cap);
  return word_sequence(n);
}

/**
 * State of a partially built packed word; the unit of work when a level is
 * split across threads by prefix.
 */
struct packed_prefix {
  std::uint64_t bits = 0;
  unsigned position = 0;
  unsigned ups = 0;
  unsigned height = 0;
};

namespace detail {

template <class Visit>
void extend_packed(unsigned n, packed_prefix at, Visit& visit) {
  if (at.position == 2 * n) {
    visit(packed_word{at.bits, n});
    return;
  }
  if (at.ups < n) extend_packed(n, {at.bits << 1, at.position + 1, at.ups + 1, at.height + 1}, visit);
  if (at.height > 0)
    extend_packed(n, {(at.bits << 1) | 1u, at.position + 1, at.ups, at.height - 1}, visit);
}

template <class Visit>
void collect_prefixes(unsigned n, unsigned depth, packed_prefix at, Visit& visit) {
  if (at.position == depth) {
    visit(at);
    return;
  }
  if (at.ups < n) collect_prefixes(n, depth, {at.bits << 1, at.position + 1, at.ups + 1, at.height + 1}, visit);
  if (at.height > 0)
    collect_prefixes(n, depth, {(at.bits << 1) | 1u, at.position + 1, at.ups, at.height - 1}, visit);
}

}  // namespace detail

// Visits every packed word of semilength n in increasing order. n <= 31.
template <class Visit>
void for_each_packed(unsigned n, Visit&& visit) {
  detail::extend_packed(n, packed_prefix{}, visit);
}

// Visits every completion of `from` to a full word of semilength n.
template <class Visit>
void for_each_packed_from(unsigned n, packed_prefix from, Visit&& visit) {
  detail::extend_packed(n, from, visit);
}

// All valid prefixes of the given length, in increasing order.
inline std::vector<packed_prefix> packed_prefixes(unsigned n, unsigned depth) {
  std::vector<packed_prefix> out;
  auto push = [&](packed_prefix p) { out.push_back(p); };
  detail::collect_prefixes(n, depth, packed_prefix{}, push);
  return out;
}

}  // namespace dyck
