#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace orgc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Malformed or out-of-range input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured resource bound (CLI exit code 3).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Always "p/q", denominators positive, including "n/1" for integers.
std::string to_string(const Rational& q);

// Accepts "p/q", "p" and optional leading sign.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace orgc
