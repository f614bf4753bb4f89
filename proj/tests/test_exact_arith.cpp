#include "simplex_angles/decimal.hpp"
#include "simplex_angles/gamma.hpp"
#include "simplex_angles/half_int.hpp"
#include "simplex_angles/json_io.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"
#include "test_support.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include <random>

using namespace simplex_angles;
using test_support::Float50;

namespace {

PiExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 4), exp(-6, 4), num(-50, 50), den(1, 30);
  std::vector<PiExpr::Term> terms;
  const int c = count(rng);
  for (int i = 0; i < c; ++i) {
    terms.emplace_back(exp(rng), make_rational(num(rng), den(rng)));
  }
  return PiExpr::from_terms(terms);
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(parse_rational("-1/2"), make_rational(-1, 2));
  EXPECT_EQ(to_fraction_string(make_rational(5)), "5/1");
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
  EXPECT_ANY_THROW(parse_rational("1/0"));
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(factorial(6), 720);
}

TEST(HalfInt, ParsesExactStringsOnly) {
  EXPECT_EQ(HalfInt::parse("-1").twice(), -2);
  EXPECT_EQ(HalfInt::parse("5/2").twice(), 5);
  EXPECT_EQ(HalfInt::parse("-1/2").twice(), -1);
  EXPECT_THROW(HalfInt::parse("1/3"), std::domain_error);
  EXPECT_THROW(HalfInt::parse("2.5"), std::invalid_argument);
  EXPECT_EQ(HalfInt::parse("1/2").plus_halves(3).to_string(), "2");
}

TEST(PiExpr, RenderAndParse) {
  const PiExpr x = PiExpr(7) - PiExpr::monomial(make_rational(2144238917, 190270080), -4);
  EXPECT_EQ(x.to_string(), "7 - 2144238917/190270080 * pi^-2");
  EXPECT_EQ(parse_pi_expr(x.to_string()), x);
  EXPECT_EQ(PiExpr::sqrt_pi().to_string(), "pi^(1/2)");
  EXPECT_EQ(parse_pi_expr("3 * pi^(3/2)"), PiExpr::monomial(3, 3));
  EXPECT_EQ(PiExpr().to_string(), "0");
  EXPECT_THROW(parse_pi_expr("1.5 * pi"), std::invalid_argument);
}

TEST(PiExpr, RingAxiomsRandomized) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const PiExpr a = random_expr(rng), b = random_expr(rng), c = random_expr(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(parse_pi_expr(a.to_string()), a);
    EXPECT_EQ(pi_expr_from_json(to_json(a)), a);
  }
}

TEST(PiExpr, MonomialInverseAndPow) {
  const PiExpr m = PiExpr::monomial(make_rational(3, 4), 3);
  EXPECT_EQ(m * m.inverse(), PiExpr(1));
  EXPECT_EQ(m.pow(3), m * m * m);
  EXPECT_EQ(m.pow(-2), (m * m).inverse());
  EXPECT_THROW((PiExpr(1) + PiExpr::pi()).inverse(), std::domain_error);
}

TEST(Gamma, HalfIntegerExamples) {
  EXPECT_EQ(gamma_half(1), PiExpr(1));
  EXPECT_EQ(gamma_half(make_rational(1, 2)), PiExpr::sqrt_pi());
  EXPECT_EQ(gamma_half(make_rational(5, 2)), PiExpr::monomial(make_rational(3, 4), 1));
  EXPECT_THROW(gamma_half(0), std::domain_error);
  EXPECT_THROW(gamma_half(make_rational(1, 3)), std::domain_error);
}

TEST(Gamma, RecurrenceAndNumericAgreement) {
  for (int t = 1; t <= 60; ++t) {
    const Rational q = make_rational(t, 2);
    EXPECT_EQ(gamma_half(q + 1), gamma_half(q) * q) << "2q = " << t;
    const Float50 ref = boost::math::tgamma(Float50(t) / 2);
    EXPECT_LT(test_support::rel_diff(test_support::to_f50(gamma_half(q)), ref), Float50("1e-45"));
  }
}

TEST(Gamma, NormalizingConstants) {
  EXPECT_EQ(c_one(0), PiExpr(make_rational(1, 2)));
  EXPECT_EQ(c_one(make_rational(-1, 2)), PiExpr::monomial(1, -2));
  EXPECT_EQ(c_one(make_rational(1, 2)), PiExpr::monomial(2, -2));
  EXPECT_EQ(c_tilde_one(1), PiExpr::monomial(1, -2));
  EXPECT_EQ(c_tilde_one(make_rational(3, 2)), PiExpr(make_rational(1, 2)));
  EXPECT_EQ(c_tilde_one(make_rational(5, 2)), PiExpr(make_rational(3, 4)));
  EXPECT_THROW(c_one(-1), std::domain_error);
  EXPECT_THROW(c_tilde_one(make_rational(1, 2)), std::domain_error);
}

TEST(Gamma, CentralBinomial) {
  EXPECT_EQ(central_binomial(4), PiExpr(6));
  // C(1, 1/2) = 4/pi
  EXPECT_EQ(central_binomial(1), PiExpr::monomial(4, -2));
}

TEST(GammaProduct, FoldingAndFormalFactors) {
  GammaProduct g = GammaProduct::gamma(make_rational(1, 2)) * GammaProduct::pi_power(make_rational(-1, 2));
  EXPECT_EQ(*g.to_pi_expr(), PiExpr(1));
  GammaProduct h = GammaProduct(2) * GammaProduct::power(make_rational(2, 3), make_rational(1, 3)) *
                   GammaProduct::pi_power(make_rational(2, 3)) * GammaProduct::gamma(make_rational(5, 3));
  EXPECT_FALSE(h.to_pi_expr().has_value());
  EXPECT_EQ(gamma_product_from_json(to_json(h)).to_string(), h.to_string());
  GammaProduct sq = h.pow(2) / h;
  EXPECT_EQ(sq.to_string(), h.to_string());
}

TEST(Decimal, Examples) {
  EXPECT_EQ(pi_eval(PiExpr::monomial(1, -4), 10), "0.1013211836");
  EXPECT_EQ(pi_eval(PiExpr(), 5), "0.0000");
  EXPECT_EQ(pi_eval(PiExpr::sqrt_pi(), 8), "1.7724539");
  EXPECT_EQ(gp_eval(GammaProduct::gamma(make_rational(1, 2)) * GammaProduct::pi_power(make_rational(-1, 2)), 10),
            "1.000000000");
  EXPECT_EQ(gp_eval(GammaProduct::gamma(3) / GammaProduct::gamma(2), 5), "2.0000");
  EXPECT_EQ(rational_eval(make_rational(1, 8), 3), "0.125");
  EXPECT_EQ(rational_eval(make_rational(5, 2), 1), "2");  // half to even
  EXPECT_EQ(rational_eval(make_rational(7, 2), 1), "4");
}

TEST(Decimal, PlanarBallPrefactor) {
  const GammaProduct g = GammaProduct(2) * GammaProduct::power(make_rational(2, 3), make_rational(1, 3)) *
                         GammaProduct::pi_power(make_rational(2, 3)) * GammaProduct::gamma(make_rational(5, 3));
  using boost::multiprecision::cbrt;
  using boost::multiprecision::pow;
  const Float50 pi = boost::math::constants::pi<Float50>();
  const Float50 ref = 2 * cbrt(Float50(2) / 3) * pow(pi, Float50(2) / 3) * boost::math::tgamma(Float50(5) / 3);
  const Float50 got(gp_eval(g, 30));
  EXPECT_LT(test_support::rel_diff(got, ref), Float50("1e-29"));
}

TEST(Decimal, FoldingDoesNotMoveDigits) {
  GammaProduct raw = GammaProduct::gamma(make_rational(7, 2)) * GammaProduct::gamma(make_rational(4, 3)) /
                     GammaProduct::gamma(make_rational(9, 2));
  GammaProduct folded = raw;
  folded.fold_half_integers();
  for (int digits : {5, 20, 40}) {
    EXPECT_EQ(gp_eval(raw, digits), gp_eval(folded, digits));
  }
}
