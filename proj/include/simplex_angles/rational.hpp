#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simplex_angles {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Arithmetic expressions on mpq_class stay canonical; only the
/// construction from a numerator/denominator pair needs an explicit
/// canonicalize(), which make_rational() does.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// True when 2r is an integer.
inline bool is_half_integer_multiple(const Rational& r) {
  return r.get_den() == 1 || r.get_den() == 2;
}

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rational pow_si(const Rational& base, long e) {
  if (e == 0) {
    return 1;
  }
  if (base == 0) {
    if (e < 0) {
      throw std::domain_error("zero raised to a negative power");
    }
    return 0;
  }
  const unsigned long m = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rational r = make_rational(pow_ui(base.get_num(), m), pow_ui(base.get_den(), m));
  if (e < 0) {
    r = 1 / r;
  }
  return r;
}

/// Always "p/q", including integers ("6/1"); this is the canonical
/// serialization used in every JSON document.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Human rendering: integers without a denominator.
inline std::string to_display_string(const Rational& r) {
  if (is_integer(r)) {
    return r.get_num().get_str();
  }
  return to_fraction_string(r);
}

/// Parses "p", "p/q", "-p/q". Decimal notation is rejected so that no
/// floating value can leak into an exact computation.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s.push_back(c);
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty rational literal");
  }
  std::size_t slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) {
      return false;
    }
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) {
      i = 1;
    }
    if (i == part.size()) {
      return false;
    }
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        return false;
      }
    }
    return true;
  };
  std::string_view sv(s);
  std::string_view num = slash == std::string::npos ? sv : sv.substr(0, slash);
  std::string_view den = slash == std::string::npos ? std::string_view("1") : sv.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
  }
  std::string num_s(num);
  if (!num_s.empty() && num_s[0] == '+') {
    num_s.erase(0, 1);
  }
  return make_rational(Integer(num_s), Integer(std::string(den)));
}

}  // namespace simplex_angles
