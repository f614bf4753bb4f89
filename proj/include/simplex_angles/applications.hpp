#pragma once

#include "simplex_angles/angle_tables.hpp"
#include "simplex_angles/gamma.hpp"
#include "simplex_angles/half_int.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"
#include "simplex_angles/verification.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace simplex_angles {

struct FVector {
  int dim = 0;
  std::vector<PiExpr> entries;  // k = 0 .. dim-1
};

/// C_{d,k} = prefactor * vector[k].
struct ReitznerResult {
  int dim = 0;
  GammaProduct prefactor;
  std::vector<PiExpr> vector;
};

namespace detail {

inline PiExpr gamma_ratio(const Rational& num, const Rational& den) { return gamma_half(num) * gamma_half(den).inverse(); }

}  // namespace detail

/// lim_{n -> inf} I~_{n,m}(d).
inline PiExpr I_inf_tilde(int m, int d) {
  if (m < 1 || d < 1) {
    throw std::domain_error("I_inf_tilde needs m, d >= 1");
  }
  const PiExpr lead = detail::gamma_ratio(make_rational(m * d + 1, 2), make_rational(m * d, 2));
  const PiExpr ratio = detail::gamma_ratio(make_rational(d, 2), make_rational(d + 1, 2)).pow(m);
  const PiExpr tail = PiExpr::monomial(pow_si(Rational(d), m - 1) / m, m - 1);
  return lead * ratio * tail;
}

/// Expected f-vector of the typical Poisson-Voronoi cell.
inline FVector voronoi_f_vector(AngleEngine& engine, int d) {
  if (d < 2) {
    throw std::domain_error("voronoi_f_vector needs d >= 2");
  }
  FVector out{d, {}};
  for (int k = 0; k < d; ++k) {
    PiExpr sum;
    for (int m = d - k; m <= d; ++m) {
      if ((m - d) % 2 != 0) {
        continue;
      }
      const HalfInt beta = HalfInt::from_twice(m - 1 + d);
      sum += I_inf_tilde(m, d) * engine.big_J_tilde(m, d - k, beta);
    }
    out.entries.push_back(sum * Rational(2));
  }
  return out;
}

/// Closed form for the expected vertex count of the typical cell.
inline PiExpr moller_f0(int d) {
  if (d < 2) {
    throw std::domain_error("moller_f0 needs d >= 2");
  }
  GammaProduct g = GammaProduct(make_rational(Integer(pow_ui(2, d + 1)), Integer(d * d)));
  g *= GammaProduct::pi_power(make_rational(d - 1, 2));
  g *= GammaProduct::gamma(make_rational(d * d + 1, 2)) / GammaProduct::gamma(make_rational(d * d, 2));
  g *= (GammaProduct::gamma(make_rational(d + 2, 2)) / GammaProduct::gamma(make_rational(d + 1, 2))).pow(d);
  auto v = g.to_pi_expr();
  if (!v) {
    throw std::logic_error("moller_f0 did not fold into the ring");
  }
  return *v;
}

/// Gamma prefactor of C_{d,k} for uniform points in the unit ball.
inline GammaProduct reitzner_ball_prefactor(int d) {
  if (d < 1) {
    throw std::domain_error("reitzner_ball needs d >= 1");
  }
  const long d2 = static_cast<long>(d) * d;
  GammaProduct g(Rational(2) / Rational(factorial(d + 1)));
  g *= GammaProduct::pi_power(make_rational(d * (d - 1), 2 * (d + 1)));
  g *= GammaProduct::gamma(make_rational(d2 + 2, 2)) * GammaProduct::gamma(make_rational(d2 + 1, d + 1)) /
       GammaProduct::gamma(make_rational(d2 + 1, 2));
  const PiExpr x = detail::gamma_ratio(make_rational(d + 1, 2), make_rational(d + 2, 2)) * Rational(d + 1);
  g *= GammaProduct::from_monomial(x).pow(make_rational(d2 + 1, d + 1));
  g.fold_half_integers();
  return g;
}

inline ReitznerResult reitzner_ball(AngleEngine& engine, int d) {
  return {d, reitzner_ball_prefactor(d), engine.J_vector(false, d, HalfInt::from_twice(1))};
}

/// c_{d,k} = C_{d,k} * small_c_factor(d).
inline GammaProduct small_c_factor(int d) {
  if (d < 1) {
    throw std::domain_error("small_c_factor needs d >= 1");
  }
  GammaProduct g = GammaProduct::from_monomial(gamma_half(make_rational(d + 2, 2))).pow(make_rational(2, d + 1));
  g *= GammaProduct(make_rational(1, d));
  g *= GammaProduct::pi_power(make_rational(-d, d + 1));
  return g;
}

/// Constant K_d with C*_{d,k} = K_d J_{d,k+1}(-1/2); always in the ring.
inline PiExpr reitzner_sphere_prefactor(int d) {
  if (d < 2) {
    throw std::domain_error("reitzner_sphere needs d >= 2");
  }
  GammaProduct g(make_rational(Integer(pow_ui(2, d)), Integer(d) * (d - 1) * (d - 1)));
  g *= GammaProduct::pi_power(make_rational(d - 2, 2));
  g *= GammaProduct::gamma(make_rational(d * (d - 2) + 2, 2)) / GammaProduct::gamma(make_rational((d - 1) * (d - 1), 2));
  g *= (GammaProduct::gamma(make_rational(d + 1, 2)) / GammaProduct::gamma(make_rational(d, 2))).pow(d - 1);
  auto v = g.to_pi_expr();
  if (!v) {
    throw std::logic_error("sphere prefactor for d=" + std::to_string(d) + " did not fold into the ring");
  }
  return *v;
}

inline std::vector<PiExpr> reitzner_sphere(AngleEngine& engine, int d) {
  const PiExpr k = reitzner_sphere_prefactor(d);
  std::vector<PiExpr> out;
  for (const PiExpr& j : engine.J_vector(false, d, HalfInt::from_twice(-1))) {
    out.push_back(k * j);
  }
  return out;
}

/// J_{n,1}(1/2), Gamma form.
inline PiExpr closed_J_n1_half(int n) {
  if (n < 1) {
    throw std::domain_error("closed_J_n1_half needs n >= 1");
  }
  const long n2 = static_cast<long>(n) * n;
  const Rational lead = make_rational(Integer(n) * (n2 + 1) * (n2 + n + 2), Integer(pow_ui(2, n + 1)) * (n + 3));
  return PiExpr::monomial(lead, -(n - 2)) *
         detail::gamma_ratio(make_rational(n + 2, 2), make_rational(n + 3, 2)).pow(n - 1) *
         detail::gamma_ratio(make_rational(n2 + 1, 2), make_rational(n2 + 2, 2));
}

/// J_{n,1}(1/2), central-binomial form.
inline PiExpr closed_J_n1_half_binomial(int n) {
  const long n2 = static_cast<long>(n) * n;
  const Rational lead = make_rational(Integer(n) * (n2 + 1) * (n2 + n + 2), Integer(n + 3) * pow_ui(2, n * (2 * n + 1)));
  return PiExpr::monomial(lead, 2) * central_binomial(n + 1).pow(n - 1) * central_binomial(n2);
}

/// J_{n,1}(-1/2), Gamma form.
inline PiExpr closed_J_n1_minus_half(int n) {
  if (n < 2) {
    throw std::domain_error("closed_J_n1_minus_half needs n >= 2");
  }
  const long m2 = static_cast<long>(n - 1) * (n - 1);
  const Rational lead = make_rational(Integer(n) * m2, Integer(pow_ui(2, n)));
  return PiExpr::monomial(lead, -(n - 2)) * detail::gamma_ratio(make_rational(n, 2), make_rational(n + 1, 2)).pow(n - 1) *
         detail::gamma_ratio(make_rational(m2, 2), make_rational(m2 + 1, 2));
}

/// J_{n,1}(-1/2), central-binomial form.
inline PiExpr closed_J_n1_minus_half_binomial(int n) {
  const long m2 = static_cast<long>(n - 1) * (n - 1);
  return PiExpr(make_rational(Integer(n), Integer(pow_ui(2, n - 1)))) * central_binomial(n - 1).pow(n - 1) *
         central_binomial(m2).inverse();
}

/// Structural check of every Voronoi entry and the report-only odd/odd
/// monomial conjecture.
inline std::vector<StructureCheck> voronoi_structure(const FVector& f) {
  std::vector<StructureCheck> out;
  for (int k = 0; k < f.dim; ++k) {
    out.push_back(arithmetic_structure_check(f.entries[k], f.dim, k, HalfInt(), StructureCase::Voronoi));
  }
  return out;
}

inline void append_voronoi_conjecture(ConjectureReport& report, const FVector& f) {
  const int d = f.dim;
  if (d % 2 == 0) {
    return;
  }
  for (int k = 1; k < d; k += 2) {
    const int e = 2 * (d - k);
    report.entries.push_back({"voronoi", d, k, HalfInt(), e, is_monomial_at(f.entries[k], e), f.entries[k]});
  }
}

}  // namespace simplex_angles
