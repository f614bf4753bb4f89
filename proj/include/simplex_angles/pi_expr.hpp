#pragma once

#include "simplex_angles/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simplex_angles {

/// Finite Laurent polynomial in sqrt(pi) with rational coefficients,
///
///     sum_e  q_e * sqrt(pi)^e,   e in Z.
///
/// Canonical form: terms sorted by ascending exponent, no zero
/// coefficients, zero is the empty sum. Structural equality is therefore an
/// exact equality test (pi is transcendental).
class PiExpr {
 public:
  using Term = std::pair<int, Rational>;

  PiExpr() = default;
  PiExpr(const Rational& r) {  // NOLINT(google-explicit-constructor)
    if (r != 0) {
      terms_.emplace_back(0, r);
    }
  }
  PiExpr(long v) : PiExpr(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  PiExpr(int v) : PiExpr(Rational(v)) {}   // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(pi)^sqrt_pi_exponent
  static PiExpr monomial(const Rational& coeff, int sqrt_pi_exponent) {
    PiExpr out;
    if (coeff != 0) {
      out.terms_.emplace_back(sqrt_pi_exponent, coeff);
    }
    return out;
  }
  static PiExpr sqrt_pi() { return monomial(1, 1); }
  static PiExpr pi() { return monomial(1, 2); }

  /// Builds from arbitrary (exponent, coefficient) pairs; merges duplicates.
  static PiExpr from_terms(std::vector<Term> terms) {
    PiExpr out;
    out.terms_ = std::move(terms);
    out.canonicalize();
    return out;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

  /// Every sqrt(pi) exponent even, i.e. the value lies in Q[pi, 1/pi].
  bool has_integer_pi_powers() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
  }

  Rational coefficient(int sqrt_pi_exponent) const {
    for (const auto& [e, c] : terms_) {
      if (e == sqrt_pi_exponent) {
        return c;
      }
    }
    return 0;
  }

  /// Sorted sqrt(pi) exponents carrying a nonzero coefficient.
  std::vector<int> support() const {
    std::vector<int> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      out.push_back(t.first);
    }
    return out;
  }

  Rational as_rational() const {
    if (!is_rational()) {
      throw std::domain_error("PiExpr is not rational: " + to_string());
    }
    return terms_.empty() ? Rational(0) : terms_[0].second;
  }

  PiExpr operator-() const {
    PiExpr out = *this;
    for (auto& t : out.terms_) {
      t.second = -t.second;
    }
    return out;
  }

  PiExpr& operator+=(const PiExpr& rhs) {
    if (rhs.terms_.empty()) {
      return *this;
    }
    if (terms_.empty()) {
      terms_ = rhs.terms_;
      return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
      if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || b->first < a->first) {
        merged.push_back(*b++);
      } else {
        a->second += b->second;
        if (a->second != 0) {
          merged.push_back(std::move(*a));
        }
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }

  PiExpr& operator-=(const PiExpr& rhs) { return *this += -rhs; }

  PiExpr& operator*=(const Rational& r) {
    if (r == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) {
      t.second *= r;
    }
    return *this;
  }

  PiExpr& operator*=(const PiExpr& rhs) {
    *this = *this * rhs;
    return *this;
  }

  /// Adds coeff * sqrt(pi)^e * rhs to *this without materializing the product.
  void add_scaled(const PiExpr& rhs, const Rational& coeff, int shift = 0) {
    if (coeff == 0 || rhs.terms_.empty()) {
      return;
    }
    PiExpr scaled = rhs;
    for (auto& t : scaled.terms_) {
      t.first += shift;
      t.second *= coeff;
    }
    *this += scaled;
  }

  friend PiExpr operator+(PiExpr a, const PiExpr& b) { return a += b; }
  friend PiExpr operator-(PiExpr a, const PiExpr& b) { return a -= b; }
  friend PiExpr operator*(PiExpr a, const Rational& r) { return a *= r; }
  friend PiExpr operator*(const Rational& r, PiExpr a) { return a *= r; }

  friend PiExpr operator*(const PiExpr& a, const PiExpr& b) {
    if (a.terms_.empty() || b.terms_.empty()) {
      return {};
    }
    if (b.terms_.size() == 1) {
      PiExpr out = a;
      for (auto& t : out.terms_) {
        t.first += b.terms_[0].first;
        t.second *= b.terms_[0].second;
      }
      return out;
    }
    if (a.terms_.size() == 1) {
      return b * a;
    }
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        raw.emplace_back(ea + eb, ca * cb);
      }
    }
    return from_terms(std::move(raw));
  }

  friend bool operator==(const PiExpr& a, const PiExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PiExpr& a, const PiExpr& b) { return !(a == b); }

  /// Multiplies by sqrt(pi)^e.
  PiExpr shifted(int sqrt_pi_exponent) const {
    PiExpr out = *this;
    for (auto& t : out.terms_) {
      t.first += sqrt_pi_exponent;
    }
    return out;
  }

  /// Only monomials are invertible inside the ring.
  PiExpr inverse() const {
    if (!is_monomial()) {
      throw std::domain_error("inverse of a non-monomial PiExpr: " + to_string());
    }
    return monomial(1 / terms_[0].second, -terms_[0].first);
  }

  /// Integer power; negative exponents require a monomial.
  PiExpr pow(long e) const {
    if (e < 0) {
      return inverse().pow(-e);
    }
    PiExpr result(1);
    PiExpr base = *this;
    while (e > 0) {
      if (e & 1) {
        result *= base;
      }
      e >>= 1;
      if (e > 0) {
        base = base * base;
      }
    }
    return result;
  }

  /// "7 - 2144238917/190270080 * pi^-2"; terms by descending power of pi.
  std::string to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool negative = c < 0;
      if (first) {
        if (negative) {
          out += "-";
        }
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      Rational mag = abs(c);
      if (e == 0) {
        out += to_display_string(mag);
        continue;
      }
      if (mag != 1) {
        out += to_display_string(mag) + " * ";
      }
      out += pi_power_string(e);
    }
    return out;
  }

 private:
  static std::string pi_power_string(int sqrt_pi_exponent) {
    if (sqrt_pi_exponent % 2 == 0) {
      int k = sqrt_pi_exponent / 2;
      return k == 1 ? std::string("pi") : "pi^" + std::to_string(k);
    }
    return "pi^(" + std::to_string(sqrt_pi_exponent) + "/2)";
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second == 0) {
          out.pop_back();
        }
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second == 0) {
      out.pop_back();
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

namespace detail {

class PiExprParser {
 public:
  explicit PiExprParser(std::string_view text) : text_(text) {}

  PiExpr parse() {
    PiExpr out;
    skip_ws();
    if (at_end()) {
      throw error("empty expression");
    }
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      out += parse_term() * Rational(sign);
      skip_ws();
    }
    return out;
  }

 private:
  PiExpr parse_term() {
    Rational coeff = 1;
    if (starts_with_pi()) {
      return PiExpr::monomial(coeff, parse_pi_power());
    }
    coeff = parse_unsigned_rational();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (!starts_with_pi()) {
        throw error("expected 'pi' after '*'");
      }
      return PiExpr::monomial(coeff, parse_pi_power());
    }
    return PiExpr(coeff);
  }

  int parse_pi_power() {
    pos_ += 2;
    skip_ws();
    if (at_end() || peek() != '^') {
      return 2;
    }
    ++pos_;
    skip_ws();
    if (!at_end() && peek() == '(') {
      ++pos_;
      long num = parse_signed_int();
      skip_ws();
      long den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = parse_signed_int();
      }
      skip_ws();
      if (at_end() || peek() != ')') {
        throw error("expected ')'");
      }
      ++pos_;
      if (den == 1) {
        return static_cast<int>(2 * num);
      }
      if (den != 2) {
        throw error("pi exponent must be a multiple of 1/2");
      }
      return static_cast<int>(num);
    }
    return static_cast<int>(2 * parse_signed_int());
  }

  long parse_signed_int() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      ++pos_;
    }
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    if (digits == pos_) {
      throw error("expected integer");
    }
    return std::strtol(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }

  Rational parse_unsigned_rational() {
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) {
      ++pos_;
    }
    if (start == pos_) {
      throw error("expected rational coefficient");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  bool starts_with_pi() const { return text_.substr(pos_, 2) == "pi"; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("cannot parse '" + std::string(text_) + "' at offset " +
                                 std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of PiExpr::to_string(). Also accepts "c*pi^k" without spaces and
/// half-integer powers written "pi^(3/2)".
inline PiExpr parse_pi_expr(std::string_view text) { return detail::PiExprParser(text).parse(); }

}  // namespace simplex_angles
