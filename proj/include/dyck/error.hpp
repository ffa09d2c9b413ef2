#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyck {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class parse_failure {
  bad_character,   // outside the alphabet fixed by the first character
  unbalanced,      // ends above the baseline
  below_baseline,  // some prefix has more D than U
};

inline const char* describe(parse_failure f) {
  switch (f) {
    case parse_failure::bad_character: return "character outside the path alphabet";
    case parse_failure::unbalanced: return "unbalanced word (ends above the baseline)";
    case parse_failure::below_baseline: return "path dips below the baseline";
  }
  return "unknown parse failure";
}

// Positions are 1-based offsets into the input text.
class parse_error : public error {
 public:
  parse_error(parse_failure reason, std::size_t position)
      : error(std::string(describe(reason)) + " at position " + std::to_string(position)),
        reason_(reason),
        position_(position) {}

  parse_failure reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

 private:
  parse_failure reason_;
  std::size_t position_;
};

class cap_exceeded : public error {
 public:
  cap_exceeded(std::size_t requested, std::size_t cap)
      : error("semilength " + std::to_string(requested) + " exceeds the generation cap " +
              std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// Raised when an interval [bottom, top] is requested but bottom is not a pattern of top.
class not_ordered : public error {
 public:
  using error::error;
};

// Two independent computations that must agree did not.
class invariant_violation : public error {
 public:
  using error::error;
};

}  // namespace dyck
