#pragma once

// Command-line front end. Exit status: 0 success, 1 a meaningful "no"
// (containment false, formula/brute mismatch), 2 usage or input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <dyck/dyck.hpp>
#include <dyck/io/cache.hpp>
#include <dyck/io/csv.hpp>
#include <dyck/io/dot.hpp>
#include <dyck/io/json.hpp>

namespace dyck::cli {

inline constexpr const char* cap_env = "DYCK_CAP";

inline std::size_t default_cap() {
  if (const char* v = std::getenv(cap_env)) {
    try {
      return std::stoul(v);
    } catch (const std::exception&) {
      throw error(std::string(cap_env) + " is not a nonnegative integer: " + v);
    }
  }
  return default_generation_cap;
}

namespace detail {

inline std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
  return out;
}

inline std::string shown(const dyck_word& w) { return w.empty() ? "(empty)" : render(w); }

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck pattern poset toolkit: containment, covers, avoidance counts, Mobius function, chains"};
  app.require_subcommand(1);

  std::optional<std::size_t> cap_flag;
  unsigned threads = 0;
  app.add_option("--cap", cap_flag, "Largest semilength that may be enumerated (default 20, env DYCK_CAP)");
  app.add_option("--threads", threads, "Threads for brute-force scans (0 = all cores)");

  std::size_t n = 0;
  std::size_t n_max = 0;
  std::size_t k = 0;
  std::string text, pattern, word, bottom_text, top_text, method = "both", family_name, cache_dir;
  bool flag_count = false, flag_list = false, flag_up = false, flag_down = false, flag_check = false;
  bool flag_dot = false, flag_json = false, flag_csv = false, flag_brute_only = false;
  std::optional<std::size_t> catalan_n, narayana_n, ballot_n;

  auto* gen = app.add_subcommand("gen", "List every Dyck word of semilength n");
  gen->add_option("-n", n, "Semilength")->required();
  gen->add_flag("--count", flag_count, "Print only the number of words");

  auto* stats = app.add_subcommand("stats", "Factors, peaks, |UDU| and |DUD| of a word");
  stats->add_option("word", word, "Dyck word")->required();

  auto* cont = app.add_subcommand("contains", "Does the text contain the pattern?");
  cont->add_option("--text", text)->required();
  cont->add_option("--pattern", pattern)->required();

  auto* occ = app.add_subcommand("occurrences", "Number of occurrences of the pattern");
  occ->add_option("--text", text)->required();
  occ->add_option("--pattern", pattern)->required();

  auto* cov = app.add_subcommand("covers", "Words covered by (--down) or covering (--up) a word");
  cov->add_option("word", word, "Dyck word")->required();
  auto* up_opt = cov->add_flag("--up", flag_up, "Words covering the word");
  auto* down_opt = cov->add_flag("--down", flag_down, "Words covered by the word (default)");
  up_opt->excludes(down_opt);
  auto* list_opt = cov->add_flag("--list", flag_list, "List the words");
  auto* count_opt = cov->add_flag("--count", flag_count, "Closed-form count (default)");
  list_opt->excludes(count_opt);
  cov->add_flag("--check", flag_check, "Also enumerate and compare with the closed form");

  auto* avoid = app.add_subcommand("avoid", "d_n(P): words of semilength n avoiding P");
  avoid->add_option("--pattern", pattern)->required();
  avoid->add_option("-n", n)->required();
  avoid->add_option("--method", method)->check(CLI::IsMember({"brute", "formula", "both"}));
  avoid->add_option("--cache", cache_dir, "Directory of cached brute-force counts");

  auto* cross = app.add_subcommand("crosscheck", "Closed form against brute force for n = 0..n-max (CSV)");
  cross->add_option("--family", family_name)->required()->check(
      CLI::IsMember({"staircase", "hill", "pyramid", "plateau"}));
  cross->add_option("-k", k)->required();
  cross->add_option("--n-max", n_max)->required();

  auto* ivl = app.add_subcommand("interval", "Hasse diagram of [bottom, top]");
  ivl->add_option("--bottom", bottom_text)->required();
  ivl->add_option("--top", top_text)->required();
  auto* dot_opt = ivl->add_flag("--dot", flag_dot, "Graphviz output");
  auto* json_opt = ivl->add_flag("--json", flag_json, "JSON output");
  dot_opt->excludes(json_opt);

  auto* mob = app.add_subcommand("mobius", "Mobius function mu(bottom, top)");
  mob->add_option("--bottom", bottom_text)->required();
  mob->add_option("--top", top_text)->required();

  auto* chains = app.add_subcommand("chains", "Saturated chains from bottom to top");
  chains->add_option("--bottom", bottom_text)->required();
  chains->add_option("--top", top_text)->required();

  auto* shape = app.add_subcommand("shape", "Ferrers shape between a word and U^x D^x");
  shape->add_option("word", word)->required();

  auto* alph = app.add_subcommand("alpha", "SYT count of the shape, checked against Dyck lattice chains");
  alph->add_option("word", word)->required();

  auto* conj = app.add_subcommand("conjecture", "Predicted constant next to exact ratios d_n / n^k");
  conj->add_option("--pattern", pattern)->required();
  conj->add_option("--n-max", n_max)->required();
  auto* csv_opt = conj->add_flag("--csv", flag_csv);
  auto* cjson_opt = conj->add_flag("--json", flag_json);
  csv_opt->excludes(cjson_opt);
  conj->add_flag("--brute-only", flag_brute_only, "Ignore closed forms even for known families");

  auto* tables = app.add_subcommand("tables", "Sequence tables");
  tables->add_option("--catalan", catalan_n, "C_0..C_N");
  tables->add_option("--narayana", narayana_n, "N(n,k) for n <= N");
  tables->add_option("--ballot", ballot_n, "b(i,j) for i <= N");
  tables->add_option("--family", family_name, "Avoidance table d_n for a family, k = min..k-max")
      ->check(CLI::IsMember({"staircase", "hill", "pyramid", "plateau"}));
  tables->add_option("--k-max", k);
  tables->add_option("--n-max", n_max);
  tables->add_option("--method", method)->check(CLI::IsMember({"brute", "formula", "both"}));
  tables->add_option("--cache", cache_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::size_t cap = cap_flag ? *cap_flag : default_cap();
    const brute_options bopt{cap, threads};

    std::optional<io::count_cache> cache;
    if (!cache_dir.empty()) cache.emplace(cache_dir);
    auto brute_count = [&](std::size_t m, const dyck_word& p) {
      if (cache) {
        if (auto hit = cache->find(p, m); hit && hit->source == engine::brute) return hit->count;
      }
      big_int v = count_avoiders_brute(m, p, bopt);
      if (cache) cache->put(p, m, v, engine::brute);
      return v;
    };

    if (*gen) {
      if (flag_count) {
        check_cap(n, cap);
        std::size_t c = 0;
        for (const auto& w : generate_all(n, cap)) (void)w, ++c;
        out << c << '\n';
      } else {
        for (const auto& w : generate_all(n, cap)) out << render(w) << '\n';
      }
      return 0;
    }

    if (*stats) {
      const auto w = parse(word);
      const auto dec = factorize(w);
      const auto st = statistics(w);
      std::vector<std::string> fw, fs, fa;
      for (const auto& f : dec.factors) {
        fw.push_back(render(f.word));
        fs.push_back(std::to_string(f.semilength));
        fa.push_back(std::to_string(f.ascents));
      }
      out << "word " << detail::shown(w) << '\n'
          << "semilength " << w.semilength() << '\n'
          << "factors " << detail::join(fw) << '\n'
          << "factor_semilengths " << detail::join(fs) << '\n'
          << "factor_ascents " << detail::join(fa) << '\n'
          << "peaks " << st.peaks << '\n'
          << "udu " << st.udu << '\n'
          << "dud " << st.dud << '\n';
      return 0;
    }

    if (*cont) {
      const bool r = contains(parse(text), parse(pattern));
      out << (r ? "true" : "false") << '\n';
      return r ? 0 : 1;
    }

    if (*occ) {
      out << count_occurrences(parse(text), parse(pattern)) << '\n';
      return 0;
    }

    if (*cov) {
      const auto w = parse(word);
      const bool up = flag_up;
      if (flag_list) {
        for (const auto& x : up ? covering_set(w) : covered_set(w)) out << detail::shown(x) << '\n';
        return 0;
      }
      const big_int formula = up ? covering_count(w) : covered_count(w);
      out << formula << '\n';
      if (flag_check) {
        const std::size_t listed = up ? covering_set(w).size() : covered_set(w).size();
        const bool ok = formula == listed;
        out << "enumerated " << listed << '\n' << (ok ? "match" : "mismatch") << '\n';
        return ok ? 0 : 1;
      }
      return 0;
    }

    if (*avoid) {
      const auto p = parse(pattern);
      std::optional<big_int> brute_v, formula_v;
      if (method != "formula") {
        brute_v = brute_count(n, p);
        out << "brute " << *brute_v << '\n';
      }
      if (method != "brute") {
        const auto fam = detect_family(p);
        if (!fam) throw error("no closed form: " + render(p) + " is not a staircase, hill, pyramid or plateau pattern");
        auto r = d_formula(*fam, n, bopt);
        formula_v = r.value;
        out << "formula " << r.value;
        if (r.source == engine::brute) out << " (brute fallback)";
        out << '\n';
      }
      if (brute_v && formula_v) {
        const bool ok = *brute_v == *formula_v;
        out << (ok ? "match" : "mismatch") << '\n';
        return ok ? 0 : 1;
      }
      return 0;
    }

    if (*cross) {
      const pattern_family fam{*parse_family(family_name), k};
      const auto rep = crosscheck(fam, n_max, bopt);
      out << io::to_csv(rep);
      return rep.all_match() ? 0 : 1;
    }

    if (*ivl) {
      const auto iv = interval(parse(bottom_text), parse(top_text), cap);
      if (flag_dot) {
        out << io::to_dot(iv);
      } else if (flag_json) {
        out << io::to_json(iv).dump(2) << '\n';
      } else {
        for (std::size_t r = 0; r < iv.layer_count(); ++r) {
          std::vector<std::string> names;
          for (const auto& w : iv.layer(r)) names.push_back(detail::shown(w));
          out << "rank " << iv.bottom.semilength() + r << ": " << detail::join(names) << '\n';
        }
        out << "nodes " << iv.nodes.size() << '\n' << "edges " << iv.cover_edges.size() << '\n';
      }
      return 0;
    }

    if (*mob) {
      out << mobius(parse(bottom_text), parse(top_text), cap) << '\n';
      return 0;
    }

    if (*chains) {
      out << saturated_chain_count(parse(bottom_text), parse(top_text), cap) << '\n';
      return 0;
    }

    if (*shape) {
      const auto lambda = complement_shape(parse(word));
      out << render(lambda) << '\n' << "cells " << lambda.cell_count() << '\n';
      return 0;
    }

    if (*alph) {
      const auto w = parse(word);
      const big_int hooks = syt_count(complement_shape(w));
      const big_int chains_v = dyck_lattice_chain_count(w);
      out << "hook_length " << hooks << '\n' << "lattice_chains " << chains_v << '\n';
      if (hooks != chains_v) {
        err << "alpha disagreement for " << render(w) << '\n';
        return 1;
      }
      out << "alpha " << hooks << '\n';
      return 0;
    }

    if (*conj) {
      conjecture_options copt;
      copt.brute = bopt;
      copt.use_formulas = !flag_brute_only;
      const auto rep = conjecture_report_for(parse(pattern), n_max, copt);
      if (flag_csv) {
        out << io::to_csv(rep);
      } else if (flag_json) {
        out << io::to_json(rep).dump(2) << '\n';
      } else {
        out << "pattern " << render(rep.pattern) << '\n'
            << "x " << rep.x << "  a " << rep.a << "  b " << rep.b << "  k " << rep.k_exp << '\n'
            << "alpha " << rep.alpha << '\n'
            << "family " << (rep.detected ? describe(*rep.detected) : "none") << '\n'
            << "predicted " << (rep.predicted ? to_string(*rep.predicted) : "n/a") << '\n';
        out << "n\td_n\tratio\t~ratio\tengine\n";
        for (const auto& r : rep.rows) {
          out << r.n << '\t' << r.count << '\t' << to_string(r.ratio) << '\t' << std::setprecision(6)
              << static_cast<double>(r.ratio) << '\t' << name(r.source) << '\n';
        }
        if (auto t = rep.trailing_ratio())
          out << (rep.diverges() ? "trailing ratio differs from predicted: " : "trailing ratio equals predicted: ")
              << to_string(*t) << '\n';
      }
      return 0;
    }

    if (*tables) {
      if (catalan_n) {
        for (std::size_t i = 0; i <= *catalan_n; ++i) out << i << '\t' << catalan(i) << '\n';
      } else if (narayana_n) {
        for (std::size_t i = 0; i <= *narayana_n; ++i) {
          for (std::size_t j = 0; j <= i; ++j) out << (j ? "\t" : "") << narayana(i, j);
          out << '\n';
        }
      } else if (ballot_n) {
        const ballot_table t(*ballot_n);
        for (long i = 0; i <= static_cast<long>(*ballot_n); ++i) {
          for (long j = 0; j <= i; ++j) out << (j ? "\t" : "") << t(i, j);
          out << '\n';
        }
      } else if (!family_name.empty()) {
        const auto kind = *parse_family(family_name);
        bool all_ok = true;
        out << "k\\n";
        for (std::size_t m = 0; m <= n_max; ++m) out << '\t' << m;
        out << '\n';
        for (std::size_t kk = pattern_family{kind, 1}.min_k(); kk <= k; ++kk) {
          const pattern_family fam{kind, kk};
          out << kk;
          for (std::size_t m = 0; m <= n_max; ++m) {
            big_int v;
            if (method == "brute") {
              v = brute_count(m, fam.realize());
            } else {
              v = d_formula(fam, m, bopt).value;
              if (method == "both" && v != brute_count(m, fam.realize())) all_ok = false;
            }
            out << '\t' << v;
          }
          out << '\n';
        }
        if (!all_ok) {
          out << "mismatch\n";
          return 1;
        }
      } else {
        err << "tables: choose one of --catalan, --narayana, --ballot, --family\n";
        return 2;
      }
      return 0;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dyck::cli
