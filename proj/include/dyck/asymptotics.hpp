#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "families.hpp"
#include "pattern.hpp"
#include "sequences.hpp"
#include "word.hpp"

namespace dyck {

// Weakly decreasing positive parts; the empty partition is allowed.
class partition {
 public:
  partition() = default;
  explicit partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw error("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw error("partition parts must be weakly decreasing");
      cells_ += parts_[i];
    }
  }

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t cell_count() const noexcept { return cells_; }
  bool empty() const noexcept { return parts_.empty(); }

  // Length of column c (0-based).
  std::size_t column(std::size_t c) const {
    std::size_t len = 0;
    while (len < parts_.size() && parts_[len] > c) ++len;
    return len;
  }

  friend bool operator==(const partition&, const partition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t cells_ = 0;
};

inline std::string render(const partition& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda.parts()[i]);
  }
  return out + ")";
}

struct runs {
  std::size_t leading_ups = 0;
  std::size_t trailing_downs = 0;
};

inline runs leading_runs(const dyck_word& p) {
  if (p.empty()) throw error("leading_runs: pattern must be nonempty");
  runs r;
  while (r.leading_ups < p.length() && p[r.leading_ups] == step::up) ++r.leading_ups;
  while (r.trailing_downs < p.length() && p[p.length() - 1 - r.trailing_downs] == step::down)
    ++r.trailing_downs;
  return r;
}

// Ferrers shape of the region between p and U^x D^x: part j counts the U
// steps strictly after the j-th D step.
inline partition complement_shape(const dyck_word& p) {
  std::size_t ups_after = 0;
  std::vector<std::size_t> parts;
  for (std::size_t i = p.length(); i-- > 0;) {
    if (p[i] == step::up) ++ups_after;
    else if (ups_after > 0) parts.push_back(ups_after);
  }
  // collected right to left, i.e. from the last D step backwards
  std::reverse(parts.begin(), parts.end());
  return partition(std::move(parts));
}

// Hook-length formula: N! / prod of hook lengths.
inline big_int syt_count(const partition& lambda) {
  big_int hooks = 1;
  const auto& rows = lambda.parts();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r]; ++c) hooks *= (rows[r] - c - 1) + (lambda.column(c) - r - 1) + 1;
  return factorial(static_cast<unsigned>(lambda.cell_count())) / hooks;
}

/**
 * Maximal chains from p up to U^x D^x in the Dyck lattice of order x, where a
 * cover turns one contiguous DU into UD. Not the pattern order.
 */
inline big_int dyck_lattice_chain_count(const dyck_word& p) {
  std::unordered_map<dyck_word, big_int> memo;
  auto walk = [&](auto& self, const dyck_word& w) -> big_int {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    big_int total = 0;
    bool any = false;
    std::vector<step> s(w.begin(), w.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] != step::down || s[i + 1] != step::up) continue;
      any = true;
      std::swap(s[i], s[i + 1]);
      total += self(self, dyck_word::from_valid(s));
      std::swap(s[i], s[i + 1]);
    }
    if (!any) total = 1;  // only U^x D^x has no valley
    memo.emplace(w, total);
    return total;
  };
  return walk(walk, p);
}

// Number of SYT of the complement shape. With `checked`, the Dyck lattice
// chain count is computed as well and any disagreement throws.
inline big_int alpha(const dyck_word& p, bool checked = true) {
  big_int by_hooks = syt_count(complement_shape(p));
  if (checked) {
    big_int by_chains = dyck_lattice_chain_count(p);
    if (by_hooks != by_chains)
      throw invariant_violation("alpha(" + render(p) + "): hook length gives " + by_hooks.str() +
                                ", chain count gives " + by_chains.str());
  }
  return by_hooks;
}

struct conjecture_row {
  std::size_t n = 0;
  big_int count;
  engine source = engine::brute;
  big_rational n_pow_k;  // n^k_exp, a proper fraction when k_exp < 0
  big_rational ratio;    // count / n^k_exp
};

/**
 * Ingredients of the predicted growth alpha * C_a * C_b / k! * n^k with
 * k = 2x - 2 - a - b, next to exact observed ratios d_n / n^k. The report
 * only juxtaposes the two.
 */
struct conjecture_report {
  dyck_word pattern;
  std::size_t x = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  long k_exp = 0;
  big_int alpha;
  std::optional<big_rational> predicted;  // absent when k_exp < 0 (pattern U^x D^x)
  std::optional<pattern_family> detected;
  std::vector<conjecture_row> rows;

  std::optional<big_rational> trailing_ratio() const {
    if (rows.empty()) return std::nullopt;
    return rows.back().ratio;
  }

  bool diverges() const {
    auto t = trailing_ratio();
    return !predicted || !t || *predicted != *t;
  }
};

struct conjecture_options {
  brute_options brute;
  bool use_formulas = true;
  std::size_t n_min = 1;
};

inline conjecture_report conjecture_report_for(const dyck_word& p, std::size_t n_max,
                                               conjecture_options opt = {}) {
  const runs rr = leading_runs(p);
  conjecture_report rep;
  rep.pattern = p;
  rep.x = p.semilength();
  rep.a = rr.leading_ups;
  rep.b = rr.trailing_downs;
  rep.k_exp = 2 * static_cast<long>(rep.x) - 2 - static_cast<long>(rep.a) - static_cast<long>(rep.b);
  rep.alpha = alpha(p);
  if (rep.k_exp < 0 && p != pyramid(rep.x))
    throw invariant_violation("negative exponent for a pattern other than U^x D^x");
  if (rep.k_exp >= 0) {
    rep.predicted = big_rational(rep.alpha * catalan(rep.a) * catalan(rep.b),
                                 factorial(static_cast<unsigned>(rep.k_exp)));
  }
  if (opt.use_formulas) rep.detected = detect_family(p);
  if (!rep.detected) check_cap(n_max, opt.brute.cap);

  for (std::size_t n = std::max<std::size_t>(opt.n_min, 1); n <= n_max; ++n) {
    conjecture_row row;
    row.n = n;
    if (rep.detected) {
      auto r = d_formula(*rep.detected, n, opt.brute);
      row.count = std::move(r.value);
      row.source = r.source;
    } else {
      row.count = count_avoiders_brute(n, p, opt.brute);
      row.source = engine::brute;
    }
    const big_int power = ipow(big_int(n), static_cast<unsigned>(rep.k_exp < 0 ? -rep.k_exp : rep.k_exp));
    row.n_pow_k = rep.k_exp < 0 ? big_rational(1, power) : big_rational(power);
    row.ratio = big_rational(row.count) / row.n_pow_k;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace dyck
