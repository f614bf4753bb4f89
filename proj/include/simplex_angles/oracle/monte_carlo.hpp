#pragma once

#include "simplex_angles/oracle/sampling.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace simplex_angles::oracle {

enum class SampleFamily { Beta, BetaPrime };

struct McOptions {
  int n = 4;
  SampleFamily family = SampleFamily::Beta;
  double beta = 0;
  int n_simplices = 2000;
  int n_directions = 20000;
  std::uint64_t seed = 1;
  /// Reuse one direction set for every simplex (common random numbers).
  bool shared_directions = false;
  /// 0 picks hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
  double membership_tol = 1e-10;
  double max_condition = 1e12;
  /// Gaussian perturbation of each direction from a separate stream; used to
  /// monitor sensitivity of the membership test. 0 disables it.
  double direction_jitter = 0;
};

struct McResult {
  double estimate = 0;
  double stderr_ = 0;
  int n_simplices = 0;
  int n_directions = 0;
  std::uint64_t seed = 0;
  int rejected = 0;
  /// Directions whose smallest coefficient fell inside the tolerance band.
  long long near_boundary = 0;
};

namespace detail {

struct SimplexOutcome {
  bool rejected = false;
  double fraction = 0;
  long long near_boundary = 0;
};

inline SimplexOutcome one_simplex(const McOptions& o, std::uint64_t index, const std::vector<Eigen::VectorXd>* shared) {
  const int d = o.n - 1;
  Rng rng = stream_rng(o.seed, index);
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(o.n);
  for (int i = 0; i < o.n; ++i) {
    pts.push_back(o.family == SampleFamily::Beta ? sample_beta_point(d, o.beta, rng)
                                                 : sample_beta_prime_point(d, o.beta, rng));
  }
  Eigen::MatrixXd edges(d, d);
  for (int i = 0; i < d; ++i) {
    edges.col(i) = pts[i + 1] - pts[0];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
  const auto& sv = svd.singularValues();
  SimplexOutcome out;
  if (sv(d - 1) == 0 || sv(0) / sv(d - 1) > o.max_condition) {
    out.rejected = true;
    return out;
  }
  const Eigen::MatrixXd inv = edges.partialPivLu().inverse();
  long long inside = 0;
  Eigen::VectorXd lambda(d);
  Rng jitter_rng = stream_rng(~o.seed, index);
  boost::random::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd moved(d);
  auto test = [&](const Eigen::VectorXd& u) {
    if (o.direction_jitter > 0) {
      for (int i = 0; i < d; ++i) {
        moved[i] = u[i] + o.direction_jitter * normal(jitter_rng);
      }
      lambda.noalias() = inv * moved;
    } else {
      lambda.noalias() = inv * u;
    }
    const double scale = lambda.cwiseAbs().maxCoeff();
    const double lo = lambda.minCoeff();
    if (std::abs(lo) <= o.membership_tol * scale) {
      ++out.near_boundary;
    }
    if (lo >= -o.membership_tol * scale) {
      ++inside;
    }
  };
  if (shared) {
    for (const auto& u : *shared) {
      test(u);
    }
  } else {
    for (int j = 0; j < o.n_directions; ++j) {
      test(sample_direction(d, rng));
    }
  }
  out.fraction = static_cast<double>(inside) / o.n_directions;
  return out;
}

}  // namespace detail

/// Estimates J_{n,1} = n * E[solid angle at one vertex] of the random simplex
/// in R^{n-1}. Each simplex uses its own stream derived from (seed, index), so
/// the result is reproducible for any thread count.
inline McResult mc_vertex_angle(const McOptions& o) {
  if (o.n < 3 || o.n_simplices < 2 || o.n_directions < 1) {
    throw std::domain_error("mc_vertex_angle needs n >= 3, at least 2 simplices and 1 direction");
  }
  if (o.family == SampleFamily::Beta && o.beta < -1) {
    throw std::domain_error("beta family needs beta >= -1");
  }
  if (o.family == SampleFamily::BetaPrime && !(o.beta > (o.n - 1) / 2.0)) {
    throw std::domain_error("beta' family needs beta > (n-1)/2");
  }
  std::vector<Eigen::VectorXd> shared;
  if (o.shared_directions) {
    Rng rng = stream_rng(o.seed, ~std::uint64_t{0});
    for (int j = 0; j < o.n_directions; ++j) {
      shared.push_back(sample_direction(o.n - 1, rng));
    }
  }
  std::vector<detail::SimplexOutcome> outcomes(o.n_simplices);
  unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(o.n_simplices));
  auto work = [&](unsigned t) {
    for (int i = static_cast<int>(t); i < o.n_simplices; i += static_cast<int>(threads)) {
      outcomes[i] = detail::one_simplex(o, static_cast<std::uint64_t>(i), o.shared_directions ? &shared : nullptr);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(work, t);
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  McResult r;
  r.n_directions = o.n_directions;
  r.seed = o.seed;
  double sum = 0;
  double sum_sq = 0;
  for (const auto& s : outcomes) {
    if (s.rejected) {
      ++r.rejected;
      continue;
    }
    ++r.n_simplices;
    sum += s.fraction;
    sum_sq += s.fraction * s.fraction;
    r.near_boundary += s.near_boundary;
  }
  if (r.n_simplices < 2) {
    throw std::runtime_error("too many degenerate simplices were rejected");
  }
  const double m = sum / r.n_simplices;
  const double var = std::max(0.0, (sum_sq - r.n_simplices * m * m) / (r.n_simplices - 1));
  r.estimate = o.n * m;
  r.stderr_ = o.n * std::sqrt(var / r.n_simplices);
  return r;
}

}  // namespace simplex_angles::oracle
