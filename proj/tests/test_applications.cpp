#include "simplex_angles/applications.hpp"
#include "simplex_angles/decimal.hpp"
#include "test_support.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

using namespace simplex_angles;
using test_support::Float50;

namespace {

PiExpr P(const char* s) { return parse_pi_expr(s); }

}  // namespace

TEST(IInfTilde, Examples) {
  for (int d = 1; d <= 8; ++d) {
    EXPECT_EQ(I_inf_tilde(1, d), PiExpr(1));
  }
  EXPECT_EQ(I_inf_tilde(2, 2), PiExpr(3));
  EXPECT_THROW(I_inf_tilde(0, 2), std::domain_error);
}

TEST(Voronoi, PublishedVectors) {
  AngleEngine e;
  for (int d = 2; d <= 10; ++d) {
    const FVector f = voronoi_f_vector(e, d);
    EXPECT_EQ(f.entries, test_support::parse_row(reference::kVoronoi.at(d))) << d;
  }
  EXPECT_EQ(voronoi_f_vector(e, 2).entries, (std::vector<PiExpr>{PiExpr(6), PiExpr(6)}));
  EXPECT_EQ(voronoi_f_vector(e, 3).entries,
            (std::vector<PiExpr>{P("96/35 * pi^2"), P("144/35 * pi^2"), P("2 + 48/35 * pi^2")}));
  EXPECT_THROW(voronoi_f_vector(e, 1), std::domain_error);
}

TEST(Voronoi, MollerEulerAndStructure) {
  AngleEngine e;
  EXPECT_EQ(moller_f0(2), PiExpr(6));
  EXPECT_EQ(moller_f0(3), P("96/35 * pi^2"));
  for (int d = 2; d <= 10; ++d) {
    const FVector f = voronoi_f_vector(e, d);
    EXPECT_EQ(f.entries[0], moller_f0(d)) << d;
    PiExpr euler;
    for (int k = 0; k < d; ++k) {
      euler += k % 2 == 0 ? f.entries[k] : -f.entries[k];
    }
    EXPECT_EQ(euler, PiExpr(d % 2 == 0 ? 0 : 2)) << d;
    for (const auto& c : voronoi_structure(f)) {
      EXPECT_TRUE(c.pass) << d;
    }
  }
}

TEST(Voronoi, OddConjectureReport) {
  AngleEngine e;
  ConjectureReport report;
  for (int d = 3; d <= 7; d += 2) {
    append_voronoi_conjecture(report, voronoi_f_vector(e, d));
  }
  EXPECT_EQ(report.entries.size(), 1u + 2u + 3u);
  EXPECT_TRUE(report.entries[0].holds);  // d = 3, k = 1: 144/35 pi^2
}

TEST(ReitznerBall, Examples) {
  AngleEngine e;
  const auto one = reitzner_ball(e, 1);
  EXPECT_EQ(*one.prefactor.to_pi_expr(), PiExpr(2));
  EXPECT_EQ(one.vector, std::vector<PiExpr>{PiExpr(1)});

  const auto three = reitzner_ball(e, 3);
  EXPECT_EQ(three.vector, test_support::parse_row({"1/2", "3/2", "1"}));
  const Float50 pi = boost::math::constants::pi<Float50>();
  const Float50 expected = 35 * sqrt(pi / 3) / 4;
  EXPECT_LT(test_support::rel_diff(Float50(gp_eval(three.prefactor, 40)), expected), Float50("1e-38"));

  EXPECT_EQ(reitzner_ball(e, 4).vector,
            (std::vector<PiExpr>{P("26741/16800 * pi^-2"), P("1 + 26741/16800 * pi^-2"), PiExpr(2), PiExpr(1)}));
}

TEST(ReitznerBall, VectorsAreHalfParameterRows) {
  AngleEngine e;
  for (int d = 1; d <= 10; ++d) {
    const auto r = reitzner_ball(e, d);
    EXPECT_EQ(r.vector, test_support::parse_row(reference::kBallVec.at(d))) << d;
    EXPECT_EQ(r.vector, e.J_vector(false, d, HalfInt::parse("1/2"))) << d;
    EXPECT_EQ(r.vector.back(), PiExpr(1));
  }
}

TEST(ReitznerBall, SmallCFactor) {
  const Float50 pi = boost::math::constants::pi<Float50>();
  for (int d = 1; d <= 8; ++d) {
    const Float50 expected = pow(boost::math::tgamma(1 + Float50(d) / 2), Float50(2) / (d + 1)) /
                             (d * pow(pi, Float50(d) / (d + 1)));
    EXPECT_LT(test_support::rel_diff(Float50(gp_eval(small_c_factor(d), 40)), expected), Float50("1e-38")) << d;
  }
}

TEST(ReitznerSphere, Examples) {
  AngleEngine e;
  EXPECT_EQ(reitzner_sphere(e, 3), test_support::parse_row({"1", "3", "2"}));
  EXPECT_EQ(reitzner_sphere(e, 4), (std::vector<PiExpr>{PiExpr(1), P("1 + 24/35 * pi^2"), P("48/35 * pi^2"), P("24/35 * pi^2")}));
  EXPECT_EQ(reitzner_sphere(e, 5), test_support::parse_row({"1", "170/9", "590/9", "715/9", "286/9"}));
  for (int d = 2; d <= 10; ++d) {
    const auto v = reitzner_sphere(e, d);
    EXPECT_EQ(v, test_support::parse_row(reference::kSphere.at(d))) << d;
    EXPECT_EQ(v[0], PiExpr(1)) << d;
  }
}

TEST(ClosedForms, Examples) {
  EXPECT_EQ(closed_J_n1_half(3), PiExpr(make_rational(1, 2)));
  EXPECT_EQ(closed_J_n1_minus_half(2), PiExpr(1));
  EXPECT_EQ(closed_J_n1_minus_half(4), P("35/24 * pi^-2"));
}

TEST(ClosedForms, MatchRecursion) {
  AngleEngine e;
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(closed_J_n1_half(n), e.big_J(n, 1, HalfInt::parse("1/2"))) << n;
    EXPECT_EQ(closed_J_n1_half_binomial(n), closed_J_n1_half(n)) << n;
  }
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(closed_J_n1_minus_half(n), e.big_J(n, 1, HalfInt::parse("-1/2"))) << n;
    EXPECT_EQ(closed_J_n1_minus_half_binomial(n), closed_J_n1_minus_half(n)) << n;
  }
}
