#pragma once

// Numerical oracle for the external-angle integrals. Deliberately independent
// of the symbolic engine: the inner CDF is integrated numerically at every
// outer node and the normalizing constants come from log-Gamma.

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace simplex_angles::oracle {

template <class Real>
struct QuadResult {
  Real value = 0;
  Real error_estimate = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Globally adaptive bisection over 61-point Gauss-Kronrod panels: the panel
/// with the largest error is split until the summed error is below
/// rel_tol * |value|, or below an absolute floor near machine precision.
template <class Real, class F>
QuadResult<Real> adaptive_integrate(F&& f, Real a, Real b, Real rel_tol, std::size_t max_panels = 4000) {
  using std::abs;
  using Rule = boost::math::quadrature::gauss_kronrod<Real, 61>;
  struct Panel {
    Real a, b, value, error;
  };
  auto make = [&](Real lo, Real hi) {
    Real err = 0;
    Real v = Rule::integrate(f, lo, hi, 0, Real(0), &err);
    return Panel{lo, hi, v, err};
  };
  auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::vector<Panel> heap{make(a, b)};
  const Real floor = 64 * std::numeric_limits<Real>::epsilon();
  QuadResult<Real> out;
  for (;;) {
    Real value = 0;
    Real error = 0;
    Real mag = 0;
    for (const Panel& p : heap) {
      value += p.value;
      error += p.error;
      mag += abs(p.value);
    }
    out.value = value;
    out.error_estimate = error;
    if (error <= rel_tol * abs(value) || error <= floor * mag) {
      out.converged = true;
      break;
    }
    if (heap.size() >= max_panels) {
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel worst = heap.back();
    heap.pop_back();
    const Real mid = (worst.a + worst.b) / 2;
    heap.push_back(make(worst.a, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(make(mid, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_error);
  }
  out.evaluations = (2 * heap.size() - 1) * 61;
  return out;
}

/// c_{1,beta} = Gamma(3/2 + beta) / (sqrt(pi) Gamma(beta + 1)), beta > -1.
template <class Real>
Real c_one(Real beta) {
  using std::exp;
  using std::sqrt;
  using boost::math::lgamma;
  return exp(lgamma(Real(1.5) + beta) - lgamma(beta + 1)) / sqrt(boost::math::constants::pi<Real>());
}

/// c~_{1,beta} = Gamma(beta) / (sqrt(pi) Gamma(beta - 1/2)), beta > 1/2.
template <class Real>
Real c_tilde_one(Real beta) {
  using std::exp;
  using std::sqrt;
  using boost::math::lgamma;
  return exp(lgamma(beta) - lgamma(beta - Real(0.5))) / sqrt(boost::math::constants::pi<Real>());
}

namespace detail {

template <class Real>
QuadResult<Real> quad_external(bool tilde, int n, int k, Real alpha, Real rel_tol) {
  using std::cos;
  using std::pow;
  if (n < 1 || k < 1 || k > n) {
    throw std::domain_error("quadrature needs 1 <= k <= n");
  }
  const Real half_pi = boost::math::constants::half_pi<Real>();
  const Real ak = alpha * k;
  const Real outer_c = tilde ? c_tilde_one<Real>((ak + 1) / 2) : c_one<Real>((ak - 1) / 2);
  const Real inner_c = tilde ? c_tilde_one<Real>((alpha + 1) / 2) : c_one<Real>((alpha - 1) / 2);
  const Real outer_pow = tilde ? ak - 1 : ak;
  const Real inner_pow = tilde ? alpha - 1 : alpha;
  const Real inner_tol = rel_tol / 100;

  std::size_t evaluations = 0;
  auto inner = [&](Real t) { return pow(cos(t), inner_pow); };
  auto cdf = [&](Real phi) {
    const auto r = adaptive_integrate<Real>(inner, -half_pi, phi, inner_tol);
    evaluations += r.evaluations;
    const Real v = inner_c * r.value;
    return v < 0 ? Real(0) : v;
  };
  auto outer = [&](Real phi) {
    const Real w = outer_c * pow(cos(phi), outer_pow);
    return n == k ? w : w * pow(cdf(phi), n - k);
  };
  QuadResult<Real> out = adaptive_integrate<Real>(outer, -half_pi, half_pi, rel_tol / 4);
  out.evaluations += evaluations;
  const Real binom = boost::math::binomial_coefficient<Real>(static_cast<unsigned>(n), static_cast<unsigned>(k));
  out.value *= binom;
  out.error_estimate *= binom;
  return out;
}

}  // namespace detail

/// Bold I_{n,k}(alpha) for real alpha > -1/k.
template <class Real = double>
QuadResult<Real> quad_I(int n, int k, Real alpha, Real rel_tol) {
  if (!(alpha * k > -1)) {
    throw std::domain_error("quad_I needs alpha > -1/k");
  }
  return detail::quad_external<Real>(false, n, k, alpha, rel_tol);
}

/// Bold I~_{n,k}(alpha) for real alpha > 0.
template <class Real = double>
QuadResult<Real> quad_I_tilde(int n, int k, Real alpha, Real rel_tol) {
  if (!(alpha > 0)) {
    throw std::domain_error("quad_I_tilde needs alpha > 0");
  }
  return detail::quad_external<Real>(true, n, k, alpha, rel_tol);
}

}  // namespace simplex_angles::oracle
