#pragma once

#include "simplex_angles/gamma.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"

#include <mpfr.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace simplex_angles {

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  Mpfr(Mpfr&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
  }
  ~Mpfr() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3219280948873623)) + 16;
}

inline void set_rational(mpfr_ptr out, const Rational& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

/// coeff * sqrt(pi)^e at the given precision.
inline void eval_term(mpfr_ptr out, const Rational& coeff, long sqrt_pi_exp, mpfr_prec_t bits) {
  Mpfr base(bits + 8);
  mpfr_const_pi(base.get(), MPFR_RNDN);
  mpfr_sqrt(base.get(), base.get(), MPFR_RNDN);
  mpfr_pow_si(base.get(), base.get(), sqrt_pi_exp, MPFR_RNDN);
  Mpfr c(bits + 8);
  set_rational(c.get(), coeff);
  mpfr_mul(out, base.get(), c.get(), MPFR_RNDN);
}

/// Sum with relative accuracy close to `bits`, raising the working precision
/// when terms cancel.
inline Mpfr eval_pi_expr(const PiExpr& x, mpfr_prec_t bits) {
  if (x.is_zero()) {
    return Mpfr(bits);
  }
  mpfr_prec_t work = bits;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Mpfr sum(work);
    Mpfr term(work);
    mpfr_exp_t max_exp = mpfr_get_emin();
    for (const auto& [e, c] : x.terms()) {
      eval_term(term.get(), c, e, work);
      max_exp = std::max(max_exp, mpfr_get_exp(term.get()));
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    if (mpfr_zero_p(sum.get())) {
      // pi is transcendental, so a nonzero PiExpr cannot sum to zero; retry.
      work *= 2;
      continue;
    }
    const mpfr_exp_t lost = max_exp - mpfr_get_exp(sum.get());
    if (lost <= 0 || work >= bits + lost + 16) {
      Mpfr out(bits);
      mpfr_set(out.get(), sum.get(), MPFR_RNDN);
      return out;
    }
    work = bits + lost + 32;
  }
  throw std::runtime_error("PiExpr evaluation did not stabilize");
}

inline Mpfr eval_gamma_product(const GammaProduct& g, mpfr_prec_t bits) {
  const mpfr_prec_t work = bits + 16;
  Mpfr acc(work);
  set_rational(acc.get(), g.rational_factor());
  Mpfr tmp(work);
  Mpfr ex(work);
  if (g.pi_exponent() != 0) {
    mpfr_const_pi(tmp.get(), MPFR_RNDN);
    set_rational(ex.get(), g.pi_exponent());
    mpfr_pow(tmp.get(), tmp.get(), ex.get(), MPFR_RNDN);
    mpfr_mul(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
  }
  for (const auto& [a, e] : g.gamma_factors()) {
    set_rational(tmp.get(), a);
    mpfr_gamma(tmp.get(), tmp.get(), MPFR_RNDN);
    mpfr_pow_si(tmp.get(), tmp.get(), e, MPFR_RNDN);
    mpfr_mul(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
  }
  for (const auto& [p, s] : g.power_factors()) {
    mpfr_set_z(tmp.get(), p.get_mpz_t(), MPFR_RNDN);
    set_rational(ex.get(), s);
    mpfr_pow(tmp.get(), tmp.get(), ex.get(), MPFR_RNDN);
    mpfr_mul(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);
  }
  return acc;
}

/// Renders sign, `digits` significant digits N and decimal exponent E
/// (value = N * 10^(E - digits + 1)) in fixed-point notation.
inline std::string format_fixed(bool negative, const Integer& n, long e, int digits) {
  std::string d = n.get_str();
  std::string out = negative ? "-" : "";
  if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
  } else if (e + 1 >= digits) {
    out += d + std::string(static_cast<std::size_t>(e + 1 - digits), '0');
  } else {
    out += d.substr(0, static_cast<std::size_t>(e + 1)) + "." + d.substr(static_cast<std::size_t>(e + 1));
  }
  return out;
}

inline std::string format_zero(int digits) {
  return digits <= 1 ? std::string("0") : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');
}

inline Rational pow10(long k) { return pow_si(Rational(10), k); }

/// Exact significant-digit rounding of a rational, half to even.
inline std::string format_rational(const Rational& q, int digits) {
  if (q == 0) {
    return format_zero(digits);
  }
  const Rational a = abs(q);
  long e = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den().get_mpz_t(), 10));
  while (a >= pow10(e + 1)) {
    ++e;
  }
  while (a < pow10(e)) {
    --e;
  }
  for (;;) {
    const Rational scaled = a * pow10(digits - 1 - e);
    Integer n;
    Integer r;
    mpz_fdiv_qr(n.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    const int cmp = ::cmp(Integer(2 * r), scaled.get_den());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(n.get_mpz_t()))) {
      n += 1;
    }
    if (n >= pow_ui(10, static_cast<unsigned long>(digits))) {
      ++e;
      continue;
    }
    return format_fixed(q < 0, n, e, digits);
  }
}

/// Rounds an MPFR value known to `guard` digits beyond `digits`. Returns
/// nullopt when the tail is too close to a rounding boundary to decide.
inline std::optional<std::string> format_mpfr(mpfr_srcptr v, int digits, int guard) {
  if (mpfr_zero_p(v)) {
    return format_zero(digits);
  }
  const mpfr_prec_t bits = mpfr_get_prec(v) + 16;
  Mpfr a(bits);
  mpfr_abs(a.get(), v, MPFR_RNDN);
  Mpfr lg(64);
  mpfr_log10(lg.get(), a.get(), MPFR_RNDN);
  long e = static_cast<long>(std::floor(mpfr_get_d(lg.get(), MPFR_RNDN)));
  Mpfr scaled(bits);
  Mpfr p10(bits);
  Mpfr frac(bits);
  for (int tries = 0; tries < 4; ++tries) {
    mpfr_set_ui(p10.get(), 10, MPFR_RNDN);
    mpfr_pow_si(p10.get(), p10.get(), digits - 1 - e, MPFR_RNDN);
    mpfr_mul(scaled.get(), a.get(), p10.get(), MPFR_RNDN);
    Integer n;
    mpfr_get_z(n.get_mpz_t(), scaled.get(), MPFR_RNDD);
    if (n < pow_ui(10, static_cast<unsigned long>(digits - 1))) {
      --e;
      continue;
    }
    mpfr_sub_z(frac.get(), scaled.get(), n.get_mpz_t(), MPFR_RNDN);
    mpfr_sub_d(frac.get(), frac.get(), 0.5, MPFR_RNDN);
    // Undecidable if |tail - 1/2| is within the guard's error budget.
    Mpfr budget(64);
    mpfr_set_ui(budget.get(), 10, MPFR_RNDN);
    mpfr_pow_si(budget.get(), budget.get(), -(guard - 2), MPFR_RNDN);
    if (mpfr_cmpabs(frac.get(), budget.get()) < 0) {
      return std::nullopt;
    }
    if (mpfr_sgn(frac.get()) > 0) {
      n += 1;
    }
    if (n >= pow_ui(10, static_cast<unsigned long>(digits))) {
      ++e;
      continue;
    }
    return format_fixed(mpfr_sgn(v) < 0, n, e, digits);
  }
  throw std::runtime_error("decimal exponent did not settle");
}

constexpr int kGuardDigits = 15;

}  // namespace detail

/// `digits` significant digits in fixed-point notation, rounded half to even.
inline std::string rational_eval(const Rational& q, int digits) {
  if (digits < 1) {
    throw std::invalid_argument("digits must be >= 1");
  }
  return detail::format_rational(q, digits);
}

inline std::string pi_eval(const PiExpr& x, int digits) {
  if (digits < 1) {
    throw std::invalid_argument("digits must be >= 1");
  }
  if (x.is_rational()) {
    return detail::format_rational(x.as_rational(), digits);
  }
  for (int guard = detail::kGuardDigits; guard <= 16 * detail::kGuardDigits; guard *= 2) {
    auto v = detail::eval_pi_expr(x, detail::bits_for_digits(digits + guard));
    if (auto s = detail::format_mpfr(v.get(), digits, guard)) {
      return *s;
    }
  }
  throw std::runtime_error("rounding boundary not resolved for " + x.to_string());
}

inline std::string gp_eval(const GammaProduct& g, int digits) {
  if (digits < 1) {
    throw std::invalid_argument("digits must be >= 1");
  }
  GammaProduct folded = g;
  folded.fold_half_integers();
  if (auto exact = folded.to_pi_expr()) {
    return pi_eval(*exact, digits);
  }
  for (int guard = detail::kGuardDigits; guard <= 16 * detail::kGuardDigits; guard *= 2) {
    auto v = detail::eval_gamma_product(folded, detail::bits_for_digits(digits + guard));
    if (auto s = detail::format_mpfr(v.get(), digits, guard)) {
      return *s;
    }
  }
  throw std::runtime_error("rounding boundary not resolved for " + g.to_string());
}

/// Decimal value of g * x.
inline std::string product_eval(const GammaProduct& g, const PiExpr& x, int digits) {
  if (digits < 1) {
    throw std::invalid_argument("digits must be >= 1");
  }
  GammaProduct folded = g;
  folded.fold_half_integers();
  if (auto exact = folded.to_pi_expr()) {
    return pi_eval(*exact * x, digits);
  }
  if (x.is_zero()) {
    return detail::format_zero(digits);
  }
  for (int guard = detail::kGuardDigits; guard <= 16 * detail::kGuardDigits; guard *= 2) {
    const mpfr_prec_t bits = detail::bits_for_digits(digits + guard);
    auto a = detail::eval_gamma_product(folded, bits);
    auto b = detail::eval_pi_expr(x, bits);
    mpfr_mul(a.get(), a.get(), b.get(), MPFR_RNDN);
    if (auto s = detail::format_mpfr(a.get(), digits, guard)) {
      return *s;
    }
  }
  throw std::runtime_error("rounding boundary not resolved");
}

inline double to_double(const PiExpr& x) {
  auto v = detail::eval_pi_expr(x, 80);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

inline double to_double(const GammaProduct& g) {
  auto v = detail::eval_gamma_product(g, 80);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

}  // namespace simplex_angles
