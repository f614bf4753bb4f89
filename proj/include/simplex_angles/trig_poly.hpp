#pragma once

#include "simplex_angles/gamma.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

namespace simplex_angles {

enum class TrigKind { Cos = 0, Sin = 1 };

/// coeff * (phi/pi)^p * cos|sin(m phi)
struct TrigTerm {
  PiExpr coeff;
  int p = 0;
  int m = 0;
  TrigKind kind = TrigKind::Cos;
};

/// Finite sum of TrigTerms; canonical by (kind, m, p) with like terms merged.
class TrigPoly {
 public:
  using Key = std::tuple<TrigKind, int, int>;  // kind, m, p

  TrigPoly() = default;
  TrigPoly(const PiExpr& constant) { add(constant, 0, 0, TrigKind::Cos); }  // NOLINT(google-explicit-constructor)

  static TrigPoly term(const PiExpr& coeff, int p, int m, TrigKind kind) {
    TrigPoly out;
    out.add(coeff, p, m, kind);
    return out;
  }

  /// Adds coeff * (phi/pi)^p * kind(m phi); negative m is folded by parity.
  void add(const PiExpr& coeff, int p, int m, TrigKind kind) {
    if (p < 0) {
      throw std::domain_error("negative polynomial power in TrigPoly");
    }
    if (coeff.is_zero()) {
      return;
    }
    if (m < 0) {
      m = -m;
      if (kind == TrigKind::Sin) {
        add(-coeff, p, m, kind);
        return;
      }
    }
    if (kind == TrigKind::Sin && m == 0) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(Key{kind, m, p}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  const std::map<Key, PiExpr>& raw() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::vector<TrigTerm> terms() const {
    std::vector<TrigTerm> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
      out.push_back(TrigTerm{c, std::get<2>(key), std::get<1>(key), std::get<0>(key)});
    }
    return out;
  }

  PiExpr coefficient(int p, int m, TrigKind kind) const {
    auto it = terms_.find(Key{kind, m, p});
    return it == terms_.end() ? PiExpr() : it->second;
  }

  TrigPoly& operator+=(const TrigPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
      add(c, std::get<2>(key), std::get<1>(key), std::get<0>(key));
    }
    return *this;
  }
  TrigPoly& operator*=(const PiExpr& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, v] : terms_) {
      v = v * c;
    }
    return *this;
  }
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator*(TrigPoly a, const PiExpr& c) { return a *= c; }
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

  /// "q * (phi/pi)^p * cos(m phi)" joined with " + ".
  std::string to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    for (const auto& [key, c] : terms_) {
      const auto [kind, m, p] = key;
      if (!out.empty()) {
        out += " + ";
      }
      out += "(" + c.to_string() + ")";
      if (p > 0) {
        out += " * (phi/pi)^" + std::to_string(p);
      }
      if (m > 0 || kind == TrigKind::Sin) {
        out += std::string(kind == TrigKind::Cos ? " * cos(" : " * sin(") + std::to_string(m) + " phi)";
      }
    }
    return out;
  }

 private:
  std::map<Key, PiExpr> terms_;
};

namespace detail {

/// Calls emit(kind, m, weight) for the product-to-sum expansion of
/// ka(ma phi) * kb(mb phi); weights are +-1/2.
template <class Emit>
void product_to_sum(TrigKind ka, int ma, TrigKind kb, int mb, Emit&& emit) {
  const Rational half(1, 2);
  if (ka == TrigKind::Cos && kb == TrigKind::Cos) {
    emit(TrigKind::Cos, ma - mb, half);
    emit(TrigKind::Cos, ma + mb, half);
  } else if (ka == TrigKind::Sin && kb == TrigKind::Sin) {
    emit(TrigKind::Cos, ma - mb, half);
    emit(TrigKind::Cos, ma + mb, -half);
  } else if (ka == TrigKind::Sin) {
    emit(TrigKind::Sin, ma + mb, half);
    emit(TrigKind::Sin, ma - mb, half);
  } else {
    emit(TrigKind::Sin, ma + mb, half);
    emit(TrigKind::Sin, mb - ma, half);
  }
}

/// sin(m pi/2) and cos(m pi/2) for integer m >= 0.
inline int sin_half_pi(int m) {
  static constexpr int kTable[4] = {0, 1, 0, -1};
  return kTable[m % 4];
}
inline int cos_half_pi(int m) {
  static constexpr int kTable[4] = {1, 0, -1, 0};
  return kTable[m % 4];
}

/// Exact values of int_{-pi/2}^{pi/2} (phi/pi)^p {cos,sin}(m phi) dphi,
/// filled per frequency on demand by integration by parts.
class BasisIntegrals {
 public:
  const PiExpr& get(TrigKind kind, int p, int m) {
    auto& column = cache_[m];
    while (static_cast<int>(column.size()) <= p) {
      extend(column, m);
    }
    return kind == TrigKind::Cos ? column[p].first : column[p].second;
  }

 private:
  static void extend(std::vector<std::pair<PiExpr, PiExpr>>& column, int m) {
    const int p = static_cast<int>(column.size());
    const Rational half_pow = pow_si(Rational(1, 2), p);
    if (m == 0) {
      PiExpr c = p % 2 == 0 ? PiExpr::monomial(half_pow / (p + 1), 2) : PiExpr();
      column.emplace_back(c, PiExpr());
      return;
    }
    const Rational inv_m(1, m);
    const int even = p % 2 == 0 ? 2 : 0;  // 1 + (-1)^p
    const int odd = 2 - even;             // 1 - (-1)^p
    PiExpr c(half_pow * inv_m * Rational(sin_half_pi(m) * even));
    PiExpr s(-half_pow * inv_m * Rational(cos_half_pi(m) * odd));
    if (p > 0) {
      const Rational f = Rational(p) * inv_m;
      c.add_scaled(column[p - 1].second, -f, -2);
      s.add_scaled(column[p - 1].first, f, -2);
    }
    column.emplace_back(std::move(c), std::move(s));
  }

  std::map<int, std::vector<std::pair<PiExpr, PiExpr>>> cache_;
};

inline bool integrates_to_zero(TrigKind kind, int p) {
  return (kind == TrigKind::Cos) == (p % 2 == 1);
}

}  // namespace detail

/// cos^k as 2^-k sum_j C(k,j) cos((k-2j) phi).
inline TrigPoly cos_power_expand(int k) {
  if (k < 0) {
    throw std::domain_error("cos_power_expand needs k >= 0");
  }
  TrigPoly out;
  const Rational scale = pow_si(Rational(1, 2), k);
  for (int j = 0; j <= k; ++j) {
    out.add(PiExpr(scale * Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)))), 0,
            k - 2 * j, TrigKind::Cos);
  }
  return out;
}

inline TrigPoly trig_mul(const TrigPoly& a, const TrigPoly& b) {
  TrigPoly out;
  for (const auto& [ka, ca] : a.raw()) {
    const auto [kind_a, ma, pa] = ka;
    for (const auto& [kb, cb] : b.raw()) {
      const auto [kind_b, mb, pb] = kb;
      const PiExpr c = ca * cb;
      if (kind_a == TrigKind::Cos && ma == 0) {
        out.add(c, pa + pb, mb, kind_b);
        continue;
      }
      if (kind_b == TrigKind::Cos && mb == 0) {
        out.add(c, pa + pb, ma, kind_a);
        continue;
      }
      detail::product_to_sum(kind_a, ma, kind_b, mb, [&](TrigKind kind, int m, const Rational& w) {
        out.add(c * w, pa + pb, m, kind);
      });
    }
  }
  return out;
}

/// Binary exponentiation; a^0 = 1.
inline TrigPoly trig_pow(const TrigPoly& a, int e) {
  if (e < 0) {
    throw std::domain_error("trig_pow needs e >= 0");
  }
  TrigPoly result(PiExpr(1));
  TrigPoly base = a;
  while (e > 0) {
    if (e & 1) {
      result = trig_mul(result, base);
    }
    e >>= 1;
    if (e > 0) {
      base = trig_mul(base, base);
    }
  }
  return result;
}

/// int_{-pi/2}^{pi/2} a(phi) dphi, exact.
inline PiExpr integrate_full(const TrigPoly& a) {
  detail::BasisIntegrals basis;
  PiExpr out;
  for (const auto& [key, c] : a.raw()) {
    const auto [kind, m, p] = key;
    if (detail::integrates_to_zero(kind, p)) {
      continue;
    }
    out += c * basis.get(kind, p, m);
  }
  return out;
}

/// integrate_full(trig_mul(a, b)) without building the product; only terms
/// that survive the parity rule are collected.
inline PiExpr integrate_product(const TrigPoly& a, const TrigPoly& b) {
  std::map<TrigPoly::Key, PiExpr> weights;
  auto collect = [&](const PiExpr& c, TrigKind kind, int m, int p) {
    if (m < 0) {
      m = -m;
      if (kind == TrigKind::Sin) {
        weights[{kind, m, p}] -= c;
        return;
      }
    }
    if (kind == TrigKind::Sin && m == 0) {
      return;
    }
    weights[{kind, m, p}] += c;
  };
  for (const auto& [ka, ca] : a.raw()) {
    const auto [kind_a, ma, pa] = ka;
    for (const auto& [kb, cb] : b.raw()) {
      const auto [kind_b, mb, pb] = kb;
      const int p = pa + pb;
      const TrigKind kind = kind_a == kind_b ? TrigKind::Cos : TrigKind::Sin;
      if (detail::integrates_to_zero(kind, p)) {
        continue;
      }
      const PiExpr c = ca * cb;
      detail::product_to_sum(kind_a, ma, kind_b, mb,
                             [&](TrigKind k, int m, const Rational& w) { collect(c * w, k, m, p); });
    }
  }
  detail::BasisIntegrals basis;
  PiExpr out;
  for (const auto& [key, c] : weights) {
    if (c.is_zero()) {
      continue;
    }
    const auto [kind, m, p] = key;
    out += c * basis.get(kind, p, m);
  }
  return out;
}

namespace detail {

/// c * int_{-pi/2}^{phi} cos^k.
inline TrigPoly cos_power_antiderivative(int k, const PiExpr& c) {
  TrigPoly out;
  const TrigPoly expansion = cos_power_expand(k);
  for (const auto& [key, q] : expansion.raw()) {
    const int m = std::get<1>(key);
    const PiExpr qc = q * c;
    if (m == 0) {
      out.add(qc.shifted(2), 1, 0, TrigKind::Cos);
      out.add(qc.shifted(2) * Rational(1, 2), 0, 0, TrigKind::Cos);
    } else {
      const PiExpr w = qc * Rational(1, m);
      out.add(w, 0, m, TrigKind::Sin);
      out.add(w * Rational(sin_half_pi(m)), 0, 0, TrigKind::Cos);
    }
  }
  return out;
}

}  // namespace detail

/// F_alpha(phi) = int_{-pi/2}^{phi} c_{1,(alpha-1)/2} cos^alpha.
inline TrigPoly inner_cdf(int alpha) {
  if (alpha < 0) {
    throw std::domain_error("inner_cdf needs alpha >= 0");
  }
  return detail::cos_power_antiderivative(alpha, c_one(make_rational(alpha - 1, 2)));
}

/// Beta' analogue: int_{-pi/2}^{phi} c~_{1,(alpha+1)/2} cos^(alpha-1).
inline TrigPoly inner_cdf_tilde(int alpha) {
  if (alpha < 1) {
    throw std::domain_error("inner_cdf_tilde needs alpha >= 1");
  }
  return detail::cos_power_antiderivative(alpha - 1, c_tilde_one(make_rational(alpha + 1, 2)));
}

/// Exact value at phi = +-pi/2 (or 0); sign is -1, 0 or +1.
inline PiExpr evaluate_at_half_pi(const TrigPoly& a, int sign) {
  PiExpr out;
  for (const auto& [key, c] : a.raw()) {
    const auto [kind, m, p] = key;
    const Rational poly = sign == 0 ? Rational(p == 0 ? 1 : 0) : pow_si(Rational(sign, 2), p);
    if (poly == 0) {
      continue;
    }
    int trig = 0;
    if (sign == 0) {
      trig = kind == TrigKind::Cos ? 1 : 0;
    } else {
      trig = kind == TrigKind::Cos ? detail::cos_half_pi(m) : sign * detail::sin_half_pi(m);
    }
    out.add_scaled(c, poly * Rational(trig));
  }
  return out;
}

/// PiExpr as a floating value of type Real (double or a multiprecision type).
template <class Real>
Real to_real(const PiExpr& x) {
  using std::pow;
  using std::sqrt;
  const Real sqrt_pi = sqrt(boost::math::constants::pi<Real>());
  Real out = 0;
  for (const auto& [e, c] : x.terms()) {
    Real q;
    if constexpr (std::is_same_v<Real, double>) {
      q = c.get_d();
    } else {
      q = Real(c.get_num().get_str()) / Real(c.get_den().get_str());
    }
    out += q * pow(sqrt_pi, e);
  }
  return out;
}

/// Pointwise value; used by tests to cross-check the symbolic algebra.
template <class Real>
Real evaluate(const TrigPoly& a, const Real& phi) {
  using std::cos;
  using std::pow;
  using std::sin;
  const Real x = phi / boost::math::constants::pi<Real>();
  Real out = 0;
  for (const auto& [key, c] : a.raw()) {
    const auto [kind, m, p] = key;
    const Real trig = kind == TrigKind::Cos ? Real(cos(Real(m) * phi)) : Real(sin(Real(m) * phi));
    out += to_real<Real>(c) * Real(pow(x, p)) * trig;
  }
  return out;
}

}  // namespace simplex_angles
