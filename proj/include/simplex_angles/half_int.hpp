#pragma once

#include "simplex_angles/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simplex_angles {

/// Integer or half-integer parameter, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(long twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt integer(long v) { return from_twice(2 * v); }

  static HalfInt from_rational(const Rational& r) {
    if (!is_half_integer_multiple(r)) {
      throw std::domain_error("not an integer or half-integer: " + to_display_string(r));
    }
    return from_twice(Rational(2 * r).get_num().get_si());
  }

  /// Exact strings only: "-1", "1/2", "-3/2", "4/2".
  static HalfInt parse(std::string_view text) { return from_rational(parse_rational(text)); }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  Rational value() const { return make_rational(twice_, 2); }

  /// Shift by s/2.
  constexpr HalfInt plus_halves(long s) const { return from_twice(twice_ + s); }
  constexpr HalfInt plus(long s) const { return from_twice(twice_ + 2 * s); }

  std::string to_string() const { return to_display_string(value()); }

  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  long twice_ = 0;
};

}  // namespace simplex_angles
