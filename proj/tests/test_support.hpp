#pragma once

#include "reference_tables.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/trig_poly.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

namespace test_support {

using Float50 = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>, boost::multiprecision::et_off>;

inline std::vector<simplex_angles::PiExpr> parse_row(const std::vector<std::string>& row) {
  std::vector<simplex_angles::PiExpr> out;
  for (const auto& s : row) {
    out.push_back(simplex_angles::parse_pi_expr(s));
  }
  return out;
}

inline Float50 to_f50(const simplex_angles::PiExpr& x) { return simplex_angles::to_real<Float50>(x); }

inline Float50 rel_diff(const Float50& a, const Float50& b) {
  using boost::multiprecision::abs;
  return b == 0 ? Float50(abs(a)) : Float50(abs(a - b) / abs(b));
}

}  // namespace test_support
