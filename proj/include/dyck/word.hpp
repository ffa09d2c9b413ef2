#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace dyck {

// U sorts before D; generation order and every canonical set order rely on it.
enum class step : std::uint8_t { up = 0, down = 1 };

inline char to_char(step s) { return s == step::up ? 'U' : 'D'; }

/**
 * A Dyck word: a balanced U/D sequence whose every prefix has at least as many
 * U as D. The empty word is valid and is the minimum of the pattern order.
 *
 * Values are immutable once built; every constructor validates.
 */
class dyck_word {
 public:
  dyck_word() = default;

  explicit dyck_word(std::vector<step> steps) : steps_(std::move(steps)) {
    long height = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      height += steps_[i] == step::up ? 1 : -1;
      if (height < 0) throw parse_error(parse_failure::below_baseline, i + 1);
    }
    if (height != 0) throw parse_error(parse_failure::unbalanced, steps_.size());
  }

  std::span<const step> steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  bool empty() const noexcept { return steps_.empty(); }
  step operator[](std::size_t i) const { return steps_[i]; }

  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }

  friend auto operator<=>(const dyck_word&, const dyck_word&) = default;
  friend bool operator==(const dyck_word&, const dyck_word&) = default;

  friend dyck_word operator+(const dyck_word& a, const dyck_word& b) {
    dyck_word r;
    r.steps_.reserve(a.length() + b.length());
    r.steps_.insert(r.steps_.end(), a.steps_.begin(), a.steps_.end());
    r.steps_.insert(r.steps_.end(), b.steps_.begin(), b.steps_.end());
    return r;
  }

  // Caller guarantees the Dyck property; checked only in debug builds.
  static dyck_word from_valid(std::vector<step> steps) {
    dyck_word r;
    r.steps_ = std::move(steps);
    assert(is_dyck(r.steps_));
    return r;
  }

  static bool is_dyck(std::span<const step> s) noexcept {
    long height = 0;
    for (step x : s) {
      height += x == step::up ? 1 : -1;
      if (height < 0) return false;
    }
    return height == 0;
  }

 private:
  std::vector<step> steps_;
};

inline std::string render(const dyck_word& w) {
  std::string out;
  out.reserve(w.length());
  for (step s : w) out.push_back(to_char(s));
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const dyck_word& w) { return os << render(w); }

namespace detail {

inline std::optional<step> classify(char c, char& alphabet) {
  auto in = [&](char a) -> std::optional<step> {
    switch (a) {
      case 'U':
        if (c == 'U' || c == 'u') return step::up;
        if (c == 'D' || c == 'd') return step::down;
        return std::nullopt;
      case '(':
        if (c == '(') return step::up;
        if (c == ')') return step::down;
        return std::nullopt;
      case '1':
        if (c == '1') return step::up;
        if (c == '0') return step::down;
        return std::nullopt;
    }
    return std::nullopt;
  };
  if (alphabet == 0) {
    for (char a : {'U', '(', '1'}) {
      if (auto s = in(a)) {
        alphabet = a;
        return s;
      }
    }
    return std::nullopt;
  }
  return in(alphabet);
}

}  // namespace detail

// Accepts U/D (any case), parentheses, or 1/0, one alphabet per word.
// Surrounding whitespace is ignored; positions in errors count from 1 in the
// original text.
inline dyck_word parse(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  std::size_t last = text.find_last_not_of(" \t\r\n");

  std::vector<step> steps;
  steps.reserve(last - first + 1);
  char alphabet = 0;
  long height = 0;
  for (std::size_t i = first; i <= last; ++i) {
    auto s = detail::classify(text[i], alphabet);
    if (!s) throw parse_error(parse_failure::bad_character, i + 1);
    height += *s == step::up ? 1 : -1;
    if (height < 0) throw parse_error(parse_failure::below_baseline, i + 1);
    steps.push_back(*s);
  }
  if (height != 0) throw parse_error(parse_failure::unbalanced, last + 1);
  return dyck_word::from_valid(std::move(steps));
}

// U^x D^x, the maximum of the Dyck lattice of order x.
inline dyck_word pyramid(std::size_t x) {
  std::vector<step> s(x, step::up);
  s.insert(s.end(), x, step::down);
  return dyck_word::from_valid(std::move(s));
}

/**
 * Packed encoding for words of semilength <= 31: step i is bit (2n-1-i) of
 * `bits`, 1 for D. Numeric order on equal semilength equals the U<D
 * lexicographic order of the sequence form.
 */
struct packed_word {
  static constexpr std::size_t max_semilength = 31;

  std::uint64_t bits = 0;
  unsigned semilength = 0;

  unsigned length() const noexcept { return 2 * semilength; }
  step at(unsigned i) const noexcept {
    return ((bits >> (length() - 1 - i)) & 1u) ? step::down : step::up;
  }

  friend auto operator<=>(const packed_word&, const packed_word&) = default;
};

inline std::optional<packed_word> pack(const dyck_word& w) {
  if (w.semilength() > packed_word::max_semilength) return std::nullopt;
  packed_word p;
  p.semilength = static_cast<unsigned>(w.semilength());
  for (step s : w) p.bits = (p.bits << 1) | static_cast<std::uint64_t>(s == step::down);
  return p;
}

inline dyck_word unpack(packed_word p) {
  std::vector<step> s(p.length());
  for (unsigned i = 0; i < p.length(); ++i) s[i] = p.at(i);
  return dyck_word::from_valid(std::move(s));
}

struct factor {
  dyck_word word;
  std::size_t semilength = 0;
  std::size_t ascents = 0;  // equals descents and peaks of the factor
};

struct factor_decomposition {
  std::vector<factor> factors;

  std::size_t count() const noexcept { return factors.size(); }
};

// Splits at every return to the baseline.
inline factor_decomposition factorize(const dyck_word& q) {
  factor_decomposition out;
  const auto s = q.steps();
  long height = 0;
  std::size_t start = 0;
  std::size_t ascents = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == step::up) {
      if (i == start || s[i - 1] == step::down) ++ascents;
      ++height;
    } else {
      --height;
    }
    if (height == 0) {
      std::vector<step> part(s.begin() + static_cast<std::ptrdiff_t>(start),
                             s.begin() + static_cast<std::ptrdiff_t>(i + 1));
      out.factors.push_back({dyck_word::from_valid(std::move(part)), (i + 1 - start) / 2, ascents});
      start = i + 1;
      ascents = 0;
    }
  }
  return out;
}

struct path_statistics {
  std::size_t peaks = 0;
  std::size_t udu = 0;
  std::size_t dud = 0;
  std::size_t ascents = 0;
};

inline path_statistics statistics(const dyck_word& q) {
  path_statistics st;
  const auto s = q.steps();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == step::up && s[i + 1] == step::down) ++st.peaks;
    if (i + 2 < s.size() && s[i + 1] != s[i] && s[i + 2] == s[i]) {
      if (s[i] == step::up) ++st.udu; else ++st.dud;
    }
  }
  // every ascent ends in exactly one peak
  st.ascents = st.peaks;
  return st;
}

}  // namespace dyck

template <>
struct std::hash<dyck::dyck_word> {
  std::size_t operator()(const dyck::dyck_word& w) const noexcept {
    std::size_t h = 1469598103934665603ull ^ w.length();
    for (dyck::step s : w) h = (h ^ static_cast<std::size_t>(s)) * 1099511628211ull;
    return h;
  }
};
