#pragma once

// Exact integer and rational arithmetic used by every coefficient family.
// Backed by GMP's C++ interface; values print as "num/den", integers bare.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cuegenus {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "n" or "n/d" (optional leading '-') into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!digits_ok(num, true) || (slash != std::string_view::npos && !digits_ok(den, false))) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  Rational r;
  r.get_num() = Integer(std::string(num));
  r.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den));
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: " + std::string(text));
  }
  r.canonicalize();
  return r;
}

/// num / den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer pow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow(const Rational& base, unsigned e) {
  Rational r(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Sum of d^k over divisors of n.
inline Integer divisor_sigma(unsigned k, unsigned n) {
  Integer s = 0;
  for (unsigned t = 1; t <= n; ++t) {
    if (n % t == 0) s += pow(Integer(t), k);
  }
  return s;
}

}  // namespace cuegenus
