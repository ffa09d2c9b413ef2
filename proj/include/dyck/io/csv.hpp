#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

#include "../asymptotics.hpp"
#include "../families.hpp"

namespace dyck::io {

inline std::string to_csv(const crosscheck_report& rep) {
  std::ostringstream os;
  os << "n,formula,brute,engine,match,square_sum_raw\n";
  for (const auto& r : rep.rows) {
    os << r.n << ',' << r.dispatched.value << ',' << r.brute << ',' << name(r.dispatched.source) << ','
       << (r.match ? "true" : "false") << ',';
    if (r.square_sum_raw) os << *r.square_sum_raw;
    os << '\n';
  }
  return os.str();
}

inline std::string to_csv(const conjecture_report& rep) {
  std::ostringstream os;
  os << "n,d_n,n^k,ratio_num,ratio_den,engine\n";
  for (const auto& r : rep.rows) {
    os << r.n << ',' << r.count << ',' << to_string(r.n_pow_k) << ','
       << boost::multiprecision::numerator(r.ratio) << ',' << boost::multiprecision::denominator(r.ratio)
       << ',' << name(r.source) << '\n';
  }
  return os.str();
}

}  // namespace dyck::io
