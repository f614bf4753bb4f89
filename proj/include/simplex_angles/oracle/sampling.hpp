#pragma once

#include <Eigen/Dense>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace simplex_angles::oracle {

using Rng = std::mt19937_64;

/// splitmix64 finalizer; spreads (seed, stream) pairs over the seed space.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for stream `index` under a user seed.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

/// Uniform direction on S^{d-1} via a normalized Gaussian vector.
inline Eigen::VectorXd sample_direction(int d, Rng& rng) {
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(d);
  double norm = 0;
  do {
    for (int i = 0; i < d; ++i) {
      v[i] = normal(rng);
    }
    norm = v.norm();
  } while (norm == 0);
  return v / norm;
}

inline double sample_gamma(double shape, Rng& rng) {
  boost::random::gamma_distribution<double> g(shape, 1.0);
  return g(rng);
}

/// Density proportional to (1 - |x|^2)^beta on the unit ball; beta = -1 is
/// the uniform law on the sphere. |X|^2 ~ Beta(d/2, beta + 1).
inline Eigen::VectorXd sample_beta_point(int d, double beta, Rng& rng) {
  if (d < 1 || beta < -1) {
    throw std::domain_error("sample_beta_point needs d >= 1 and beta >= -1");
  }
  Eigen::VectorXd u = sample_direction(d, rng);
  if (beta == -1) {
    return u;
  }
  const double ga = sample_gamma(d / 2.0, rng);
  const double gb = sample_gamma(beta + 1, rng);
  return u * std::sqrt(ga / (ga + gb));
}

/// Density proportional to (1 + |x|^2)^-beta on R^d, beta > d/2.
/// |X|^2 ~ BetaPrime(d/2, beta - d/2).
inline Eigen::VectorXd sample_beta_prime_point(int d, double beta, Rng& rng) {
  if (d < 1 || !(beta > d / 2.0)) {
    throw std::domain_error("sample_beta_prime_point needs beta > d/2");
  }
  Eigen::VectorXd u = sample_direction(d, rng);
  const double ga = sample_gamma(d / 2.0, rng);
  const double gb = sample_gamma(beta - d / 2.0, rng);
  return u * std::sqrt(ga / gb);
}

}  // namespace simplex_angles::oracle
