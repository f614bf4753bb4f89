#pragma once

#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simplex_angles {

/// Gamma at a positive integer or half-integer: (q-1)! or (2n)!/(4^n n!) sqrt(pi).
inline PiExpr gamma_half(const Rational& q) {
  if (!is_half_integer_multiple(q) || q <= 0) {
    throw std::domain_error("gamma_half needs a positive integer or half-integer, got " + to_display_string(q));
  }
  if (is_integer(q)) {
    return PiExpr(Rational(factorial(q.get_num().get_ui() - 1)));
  }
  const unsigned long n = Rational(q - Rational(1, 2)).get_num().get_ui();
  return PiExpr::monomial(make_rational(factorial(2 * n), pow_ui(4, n) * factorial(n)), 1);
}

/// Normalizing constant of the one-dimensional beta density, beta > -1.
inline PiExpr c_one(const Rational& beta) {
  if (!is_half_integer_multiple(beta) || beta <= -1) {
    throw std::domain_error("c_one needs a half-integer beta > -1, got " + to_display_string(beta));
  }
  return (gamma_half(Rational(3, 2) + beta) * gamma_half(beta + 1).inverse()).shifted(-1);
}

/// Normalizing constant of the one-dimensional beta' density, beta > 1/2.
inline PiExpr c_tilde_one(const Rational& beta) {
  if (!is_half_integer_multiple(beta) || beta <= Rational(1, 2)) {
    throw std::domain_error("c_tilde_one needs a half-integer beta > 1/2, got " + to_display_string(beta));
  }
  return (gamma_half(beta) * gamma_half(beta - Rational(1, 2)).inverse()).shifted(-1);
}

/// 2^z Gamma((z+1)/2) / (sqrt(pi) Gamma((z+2)/2)), the analytic continuation of
/// binom(z, z/2). Integer z >= 0.
inline PiExpr central_binomial(long z) {
  if (z < 0) {
    throw std::domain_error("central_binomial needs z >= 0");
  }
  PiExpr g = gamma_half(make_rational(z + 1, 2)) * gamma_half(make_rational(z + 2, 2)).inverse();
  return g.shifted(-1) * Rational(pow_ui(2, static_cast<unsigned long>(z)));
}

/// rational * pi^pi_exp * prod Gamma(a_i)^{e_i} * prod b_j^{s_j}.
///
/// Power factors are kept over primes with exponents in (0, 1); integer parts
/// are absorbed into the rational factor. No equality operator: comparisons
/// go through gp_eval.
class GammaProduct {
 public:
  GammaProduct() = default;
  GammaProduct(const Rational& r) : rational_(r) {}  // NOLINT(google-explicit-constructor)

  static GammaProduct gamma(const Rational& argument, long exponent = 1) {
    if (argument <= 0) {
      throw std::domain_error("Gamma argument must be positive, got " + to_display_string(argument));
    }
    GammaProduct out;
    if (exponent != 0) {
      out.gamma_[argument] = exponent;
    }
    return out;
  }

  static GammaProduct pi_power(const Rational& exponent) {
    GammaProduct out;
    out.pi_exp_ = exponent;
    return out;
  }

  static GammaProduct power(const Rational& base, const Rational& exponent) {
    if (base <= 0) {
      throw std::domain_error("power base must be positive, got " + to_display_string(base));
    }
    GammaProduct out;
    out.absorb_power(base, exponent);
    return out;
  }

  /// A monomial q * sqrt(pi)^e; anything else has no product form.
  static GammaProduct from_monomial(const PiExpr& x) {
    if (x.is_zero()) {
      return GammaProduct(Rational(0));
    }
    if (!x.is_monomial()) {
      throw std::domain_error("not a monomial: " + x.to_string());
    }
    GammaProduct out(x.terms()[0].second);
    out.pi_exp_ = make_rational(x.terms()[0].first, 2);
    return out;
  }

  const Rational& rational_factor() const { return rational_; }
  const Rational& pi_exponent() const { return pi_exp_; }
  const std::map<Rational, long>& gamma_factors() const { return gamma_; }
  /// prime -> exponent in (0, 1)
  const std::map<Integer, Rational>& power_factors() const { return powers_; }

  GammaProduct& operator*=(const GammaProduct& rhs) {
    rational_ *= rhs.rational_;
    pi_exp_ += rhs.pi_exp_;
    for (const auto& [a, e] : rhs.gamma_) {
      long& slot = gamma_[a];
      slot += e;
      if (slot == 0) {
        gamma_.erase(a);
      }
    }
    for (const auto& [p, s] : rhs.powers_) {
      add_prime_power(p, s);
    }
    return *this;
  }
  friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }
  friend GammaProduct operator/(GammaProduct a, const GammaProduct& b) { return a *= b.pow(-1); }

  /// Integer powers always; fractional powers only without Gamma factors
  /// and with a positive rational factor.
  GammaProduct pow(const Rational& s) const {
    if (!is_integer(s) && !gamma_.empty()) {
      throw std::domain_error("fractional power of a product containing Gamma factors");
    }
    GammaProduct out;
    out.pi_exp_ = pi_exp_ * s;
    if (is_integer(s)) {
      out.rational_ = pow_si(rational_, s.get_num().get_si());
      for (const auto& [a, e] : gamma_) {
        out.gamma_[a] = e * s.get_num().get_si();
      }
    } else {
      if (rational_ <= 0) {
        throw std::domain_error("fractional power of a non-positive rational factor");
      }
      out.absorb_power(rational_, s);
    }
    for (const auto& [p, t] : powers_) {
      out.add_prime_power(p, t * s);
    }
    return out;
  }

  /// Absorbs Gamma at integer and half-integer arguments into the rational
  /// factor and the pi exponent.
  GammaProduct& fold_half_integers() {
    for (auto it = gamma_.begin(); it != gamma_.end();) {
      if (is_half_integer_multiple(it->first)) {
        const PiExpr g = gamma_half(it->first);
        const auto& [e, c] = g.terms()[0];
        rational_ *= pow_si(c, it->second);
        pi_exp_ += make_rational(static_cast<long>(e) * it->second, 2);
        it = gamma_.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  bool is_foldable() const {
    GammaProduct tmp = *this;
    tmp.fold_half_integers();
    return tmp.gamma_.empty() && tmp.powers_.empty() && is_half_integer_multiple(tmp.pi_exp_);
  }

  /// Value as a PiExpr monomial when everything folds into the ring.
  std::optional<PiExpr> to_pi_expr() const {
    GammaProduct tmp = *this;
    tmp.fold_half_integers();
    if (!tmp.gamma_.empty() || !tmp.powers_.empty() || !is_half_integer_multiple(tmp.pi_exp_)) {
      return std::nullopt;
    }
    return PiExpr::monomial(tmp.rational_, static_cast<int>(Rational(2 * tmp.pi_exp_).get_num().get_si()));
  }

  std::string to_string() const {
    std::vector<std::string> parts;
    if (rational_ != 1 || (pi_exp_ == 0 && gamma_.empty() && powers_.empty())) {
      parts.push_back(to_display_string(rational_));
    }
    if (pi_exp_ != 0) {
      parts.push_back(pi_exp_ == 1 ? std::string("pi") : "pi^(" + to_display_string(pi_exp_) + ")");
    }
    for (const auto& [a, e] : gamma_) {
      std::string g = "Gamma(" + to_display_string(a) + ")";
      if (e != 1) {
        g += "^" + std::to_string(e);
      }
      parts.push_back(g);
    }
    for (const auto& [p, s] : powers_) {
      parts.push_back(p.get_str() + "^(" + to_display_string(s) + ")");
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i ? " * " : "") + parts[i];
    }
    return out;
  }

 private:
  static std::vector<std::pair<Integer, unsigned long>> factorize(Integer n) {
    std::vector<std::pair<Integer, unsigned long>> out;
    for (unsigned long p = 2; p <= 1000000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
      unsigned long count = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++count;
      }
      if (count) {
        out.emplace_back(Integer(p), count);
      }
    }
    // A leftover cofactor is kept as a base even if not proven prime.
    if (n > 1) {
      out.emplace_back(n, 1);
    }
    return out;
  }

  void absorb_power(const Rational& base, const Rational& s) {
    for (const auto& [p, c] : factorize(base.get_num())) {
      add_prime_power(p, s * Rational(c));
    }
    for (const auto& [p, c] : factorize(base.get_den())) {
      add_prime_power(p, -s * Rational(c));
    }
  }

  void add_prime_power(const Integer& p, const Rational& s) {
    Rational total = s;
    if (auto it = powers_.find(p); it != powers_.end()) {
      total += it->second;
      powers_.erase(it);
    }
    Integer whole;
    mpz_fdiv_q(whole.get_mpz_t(), total.get_num().get_mpz_t(), total.get_den().get_mpz_t());
    const Rational frac = total - Rational(whole);
    rational_ *= pow_si(Rational(p), whole.get_si());
    if (frac != 0) {
      powers_[p] = frac;
    }
  }

  Rational rational_ = 1;
  Rational pi_exp_ = 0;
  std::map<Rational, long> gamma_;
  std::map<Integer, Rational> powers_;
};

}  // namespace simplex_angles
