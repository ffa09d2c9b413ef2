#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "../bigint.hpp"
#include "../error.hpp"
#include "../families.hpp"
#include "../word.hpp"

namespace dyck::io {

/**
 * One cached avoider count. On disk: one CSV file per pattern with the exact
 * header `pattern,n,count,engine` and one row per n.
 */
struct cache_record {
  std::string pattern;  // canonical U/D text
  std::size_t n = 0;
  big_int count;
  engine source = engine::brute;

  friend bool operator==(const cache_record&, const cache_record&) = default;
};

inline constexpr std::string_view cache_header = "pattern,n,count,engine";

inline std::string to_cache_csv(const std::vector<cache_record>& records) {
  std::ostringstream os;
  os << cache_header << '\n';
  for (const auto& r : records)
    os << r.pattern << ',' << r.n << ',' << r.count << ',' << name(r.source) << '\n';
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

inline bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

inline std::vector<cache_record> parse_cache_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != cache_header) throw error("cache: missing or wrong header");
  std::vector<cache_record> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = detail::split_fields(line);
    auto bad = [&](const std::string& why) { return error("cache line " + std::to_string(lineno) + ": " + why); };
    if (f.size() != 4) throw bad("expected 4 fields");
    cache_record r;
    r.pattern = render(parse(f[0]));
    if (r.pattern != f[0]) throw bad("pattern is not canonical");
    if (!detail::all_digits(f[1])) throw bad("n is not a nonnegative integer");
    r.n = std::stoul(f[1]);
    if (!detail::all_digits(f[2])) throw bad("count is not a nonnegative integer");
    r.count = big_int(f[2]);
    if (f[3] == "brute") r.source = engine::brute;
    else if (f[3] == "formula") r.source = engine::formula;
    else throw bad("unknown engine '" + f[3] + "'");
    out.push_back(std::move(r));
  }
  return out;
}

/**
 * Directory of per-pattern CSV files. (pattern, n) is unique; a formula value
 * stored next to a brute value for the same key must agree with it, and the
 * brute value wins. Writes go through a temporary file and a rename.
 */
class count_cache {
 public:
  explicit count_cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const noexcept { return dir_; }

  std::filesystem::path file_for(const dyck_word& p) const {
    return dir_ / ((p.empty() ? std::string("empty") : render(p)) + ".csv");
  }

  std::vector<cache_record> load(const dyck_word& p) const {
    const auto path = file_for(p);
    if (!std::filesystem::exists(path)) return {};
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    auto records = parse_cache_csv(buf.str());
    for (const auto& r : records)
      if (r.pattern != render(p)) throw error("cache file " + path.string() + " holds a foreign pattern");
    return records;
  }

  std::optional<cache_record> find(const dyck_word& p, std::size_t n) const {
    for (auto& r : load(p))
      if (r.n == n) return r;
    return std::nullopt;
  }

  void put(const dyck_word& p, std::size_t n, const big_int& count, engine source) {
    auto records = load(p);
    auto it = std::find_if(records.begin(), records.end(), [&](const cache_record& r) { return r.n == n; });
    if (it != records.end()) {
      if (it->count != count)
        throw invariant_violation("cache conflict for " + render(p) + " at n=" + std::to_string(n) + ": " +
                                  it->count.str() + " (" + name(it->source) + ") vs " + count.str() + " (" +
                                  name(source) + ")");
      if (source == engine::brute) it->source = engine::brute;
    } else {
      records.push_back({render(p), n, count, source});
    }
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    write_atomic(file_for(p), to_cache_csv(records));
  }

 private:
  static void write_atomic(const std::filesystem::path& target, const std::string& content) {
    std::filesystem::create_directories(target.parent_path());
    std::random_device rd;
    auto tmp = target;
    tmp += ".tmp" + std::to_string(rd());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << content;
      if (!out.flush()) throw error("cache: cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }

  std::filesystem::path dir_;
};

}  // namespace dyck::io
