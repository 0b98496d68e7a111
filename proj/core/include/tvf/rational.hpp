#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace tvf {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Canonical "n" / "n/d" form, denominator positive, gcd-reduced.
std::string rat_text(const Rat& q);
Rat rat_parse(const std::string& s);

// Error taxonomy shared across the library.
struct TvfError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : TvfError {
  using TvfError::TvfError;
};
struct DomainError : TvfError {
  using TvfError::TvfError;
};
struct RangeError : TvfError {
  using TvfError::TvfError;
};
struct CapacityError : TvfError {
  using TvfError::TvfError;
};
struct StructuralError : TvfError {
  using TvfError::TvfError;
};

inline Rat rat_pow(const Rat& base, int e) {
  if (e < 0) throw RangeError("rat_pow: negative exponent");
  Rat r = 1;
  Rat b = base;
  int n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

}  // namespace tvf
