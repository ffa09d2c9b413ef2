#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "pattern.hpp"
#include "sequences.hpp"
#include "word.hpp"

namespace dyck {

/**
 * The four pattern shapes with closed-form avoidance counts, each of
 * semilength k:
 *   staircase  (UD)^k               k >= 1
 *   hill       U^{k-1} D U D^{k-1}  k >= 2
 *   pyramid    U^k D^k              k >= 1
 *   plateau    U^{k-1} D^{k-1} U D  k >= 1
 */
enum class family { staircase, hill, pyramid, plateau };

inline const char* name(family f) {
  switch (f) {
    case family::staircase: return "staircase";
    case family::hill: return "hill";
    case family::pyramid: return "pyramid";
    case family::plateau: return "plateau";
  }
  return "?";
}

inline std::optional<family> parse_family(std::string_view s) {
  for (family f : {family::staircase, family::hill, family::pyramid, family::plateau})
    if (s == name(f)) return f;
  return std::nullopt;
}

struct pattern_family {
  family kind = family::staircase;
  std::size_t k = 1;

  std::size_t min_k() const noexcept { return kind == family::hill ? 2 : 1; }

  dyck_word realize() const {
    if (k < min_k())
      throw error(std::string(name(kind)) + " needs k >= " + std::to_string(min_k()));
    std::vector<step> s;
    auto put = [&](step x, std::size_t times) { s.insert(s.end(), times, x); };
    switch (kind) {
      case family::staircase:
        for (std::size_t i = 0; i < k; ++i) put(step::up, 1), put(step::down, 1);
        break;
      case family::hill:
        put(step::up, k - 1), put(step::down, 1), put(step::up, 1), put(step::down, k - 1);
        break;
      case family::pyramid:
        put(step::up, k), put(step::down, k);
        break;
      case family::plateau:
        put(step::up, k - 1), put(step::down, k - 1), put(step::up, 1), put(step::down, 1);
        break;
    }
    auto w = dyck_word::from_valid(std::move(s));
    if (w.semilength() != k) throw invariant_violation("family realization has the wrong semilength");
    return w;
  }

  friend bool operator==(const pattern_family&, const pattern_family&) = default;
};

inline std::string describe(const pattern_family& f) {
  return std::string(name(f.kind)) + " k=" + std::to_string(f.k);
}

// First family (staircase, pyramid, hill, plateau) whose realization is p.
inline std::optional<pattern_family> detect_family(const dyck_word& p) {
  if (p.empty()) return std::nullopt;
  for (family f : {family::staircase, family::pyramid, family::hill, family::plateau}) {
    pattern_family cand{f, p.semilength()};
    if (cand.k < cand.min_k()) continue;
    if (cand.realize() == p) return cand;
  }
  return std::nullopt;
}

enum class engine { formula, brute };

inline const char* name(engine e) { return e == engine::formula ? "formula" : "brute"; }

struct count_result {
  big_int value;
  engine source = engine::formula;
};

// sum_{j>=1} b(k-j, n-k+j)^2, ballot numbers taken as zero off 0 <= j <= i.
inline big_int ballot_square_sum(std::size_t k, std::size_t n) {
  const auto lk = static_cast<long>(k);
  const auto ln = static_cast<long>(n);
  big_int sum = 0;
  for (long j = 1; j <= lk; ++j) {
    const big_int b = ballot(lk - j, ln - lk + j);
    sum += b * b;
  }
  return sum;
}

// Avoiders of U^{k-1} D^{k-1} U D, valid for n >= 2k-3.
inline big_int plateau_closed_form(std::size_t k, std::size_t n) {
  const auto lk = static_cast<long>(k);
  const auto ln = static_cast<long>(n);
  big_int value = binomial(ln - 1, lk - 2) * catalan(k >= 1 ? k - 1 : 0);
  for (long s = 2; s <= lk - 2; ++s) {
    big_int inner = 0;
    for (long i = 0; i <= s - 2; ++i)
      inner += ballot(lk - 3 - i, s - 2 - i) * binomial(ln - lk - s + 3 + 2 * i, i);
    value -= ballot(lk - 2, s) * inner;
  }
  return value;
}

// Smallest n at which the plateau closed form is used. For k = 1 the
// pattern is UD and the form only holds from n = 1.
inline std::size_t plateau_threshold(std::size_t k) { return k >= 2 ? 2 * k - 3 : 1; }

/**
 * d_n for a family pattern. Everything is exact integer arithmetic. The
 * plateau family falls back to brute force below its threshold; the result
 * records which engine produced the value.
 */
inline count_result d_formula(const pattern_family& fam, std::size_t n, brute_options opt = {}) {
  const std::size_t k = fam.k;
  if (k < fam.min_k())
    throw error(std::string(name(fam.kind)) + " needs k >= " + std::to_string(fam.min_k()));

  switch (fam.kind) {
    case family::staircase: {
      big_int sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += narayana(n, i);
      return {sum, engine::formula};
    }
    case family::hill: {
      if (n < k) return {catalan(n), engine::formula};
      if (n == k) return {catalan(n) - 1, engine::formula};
      if (n + 3 >= 2 * k) {
        const big_int c = catalan(k - 1);
        assert(n > 2 * k - 2 || ballot_square_sum(k, n) == c * c);
        return {c * c, engine::formula};
      }
      return {ballot_square_sum(k, n), engine::formula};
    }
    case family::pyramid:
      if (n + 1 >= 2 * k) return {0, engine::formula};
      return {ballot_square_sum(k, n), engine::formula};
    case family::plateau:
      if (n >= plateau_threshold(k)) return {plateau_closed_form(k, n), engine::formula};
      return {count_avoiders_brute(n, fam.realize(), opt), engine::brute};
  }
  throw error("unknown family");
}

struct crosscheck_row {
  std::size_t n = 0;
  count_result dispatched;
  big_int brute;
  bool match = false;
  // the bare ballot square sum, shown for hill so that the range where it
  // departs from the dispatched value is visible
  std::optional<big_int> square_sum_raw;
};

struct crosscheck_report {
  pattern_family fam;
  std::vector<crosscheck_row> rows;

  bool all_match() const {
    for (const auto& r : rows)
      if (!r.match) return false;
    return true;
  }
};

inline crosscheck_report crosscheck(const pattern_family& fam, std::size_t n_max, brute_options opt = {}) {
  check_cap(n_max, opt.cap);
  const dyck_word p = fam.realize();
  crosscheck_report rep{fam, {}};
  for (std::size_t n = 0; n <= n_max; ++n) {
    crosscheck_row row;
    row.n = n;
    row.dispatched = d_formula(fam, n, opt);
    row.brute = count_avoiders_brute(n, p, opt);
    row.match = row.dispatched.value == row.brute;
    if (fam.kind == family::hill) row.square_sum_raw = ballot_square_sum(fam.k, n);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace dyck
