#pragma once

#include "simplex_angles/angle_tables.hpp"
#include "simplex_angles/half_int.hpp"
#include "simplex_angles/pi_expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplex_angles {

enum class Distribution { Beta, BetaPrime };

inline std::string to_string(Distribution d) { return d == Distribution::Beta ? "beta" : "beta-prime"; }

inline Distribution distribution_from_string(const std::string& s) {
  if (s == "beta") return Distribution::Beta;
  if (s == "beta-prime") return Distribution::BetaPrime;
  throw std::invalid_argument("unknown family '" + s + "'");
}

struct Residual {
  std::string relation;
  int row = 0;
  int col = 0;
  PiExpr value;
};

struct RelationReport {
  int n = 0;
  HalfInt beta;
  Distribution family = Distribution::Beta;
  std::vector<Residual> residuals;

  bool ok() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.value.is_zero(); });
  }
};

/// (n, beta) usable by the relations: at least one edge and a symbolic I parameter.
inline bool relations_admissible(int n, HalfInt beta, Distribution family) {
  const bool tilde = family == Distribution::BetaPrime;
  if (n < 2) {
    return false;
  }
  if (tilde) {
    return AngleEngine::alpha_for(true, n, beta) >= 1;
  }
  return beta.twice() >= -2 && AngleEngine::alpha_for(false, n, beta) >= 0;
}

namespace detail {

struct FamilyOps {
  AngleEngine& engine;
  bool tilde;
  long alpha;
  HalfInt beta;

  PiExpr I(int n, int k) const {
    return tilde ? engine.big_I_tilde(n, k, static_cast<int>(alpha)) : engine.big_I(n, k, static_cast<int>(alpha));
  }
  /// J_{m,k} at the parameter that keeps the I parameter fixed, starting from n.
  PiExpr J(int n, int m, int k) const {
    const HalfInt b = beta.plus_halves(tilde ? -(n - m) : (n - m));
    return tilde ? engine.big_J_tilde(m, k, b) : engine.big_J(m, k, b);
  }
};

}  // namespace detail

/// Exact residuals of both relations, the dual relation, and AB = BA = E.
inline RelationReport verify_relations(AngleEngine& engine, int n, HalfInt beta, Distribution family) {
  if (!relations_admissible(n, beta, family)) {
    throw std::domain_error("parameters n=" + std::to_string(n) + " beta=" + beta.to_string() +
                            " are not admissible for the " + to_string(family) + " relations");
  }
  const bool tilde = family == Distribution::BetaPrime;
  const detail::FamilyOps ops{engine, tilde, AngleEngine::alpha_for(tilde, n, beta), beta};
  RelationReport report{n, beta, family, {}};

  for (int k = 1; k < n; ++k) {
    PiExpr first(-Rational(binomial(n, k)));
    PiExpr second;
    PiExpr dual;
    for (int s = 0; n - s >= k; ++s) {
      const PiExpr term = ops.I(n, n - s) * ops.J(n, n - s, k);
      first += term;
      second += s % 2 == 0 ? term : -term;
      const PiExpr dual_term = ops.J(n, n, n - s) * ops.I(n - s, k);
      dual += s % 2 == 0 ? dual_term : -dual_term;
    }
    report.residuals.push_back({"relation-1", n, k, first});
    report.residuals.push_back({"relation-2", n, k, second});
    report.residuals.push_back({"dual", n, k, dual});
  }

  // A_{i,m} = (-1)^i I_{i,m}, B_{m,k} = (-1)^m J_{m,k} at the shifted parameter.
  const int N = n;
  std::vector<std::vector<PiExpr>> A(N + 1, std::vector<PiExpr>(N + 1));
  std::vector<std::vector<PiExpr>> B(N + 1, std::vector<PiExpr>(N + 1));
  for (int i = 1; i <= N; ++i) {
    for (int m = 1; m <= i; ++m) {
      const PiExpr a = ops.I(i, m);
      A[i][m] = i % 2 == 0 ? a : -a;
      const PiExpr b = ops.J(N, i, m);
      B[i][m] = i % 2 == 0 ? b : -b;
    }
  }
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= i; ++j) {
      PiExpr ab(i == j ? -1 : 0);
      PiExpr ba(i == j ? -1 : 0);
      for (int m = j; m <= i; ++m) {
        ab += A[i][m] * B[m][j];
        ba += B[i][m] * A[m][j];
      }
      report.residuals.push_back({"AB-E", i, j, ab});
      report.residuals.push_back({"BA-E", i, j, ba});
    }
  }
  return report;
}

/// E upsilon_j of the tangent cone at a k-vertex face, j = 0..n-1 (zero below k-1).
inline std::vector<PiExpr> conic_intrinsic_volumes(AngleEngine& engine, int n, int k, HalfInt beta,
                                                   Distribution family) {
  if (k < 1 || k >= n || !relations_admissible(n, beta, family)) {
    throw std::domain_error("conic intrinsic volumes need 1 <= k < n and admissible beta");
  }
  const bool tilde = family == Distribution::BetaPrime;
  const detail::FamilyOps ops{engine, tilde, AngleEngine::alpha_for(tilde, n, beta), beta};
  const Rational inv = 1 / Rational(binomial(n, k));
  std::vector<PiExpr> out(n);
  for (int j = k - 1; j <= n - 1; ++j) {
    out[j] = ops.I(n, j + 1) * ops.J(n, j + 1, k) * inv;
  }
  return out;
}

enum class StructureCase { I, ITilde, J, JTilde, Voronoi };

struct StructureCheck {
  bool pass = true;
  std::vector<int> support;
  std::vector<int> allowed;
  std::vector<int> violations;
};

/// Allowed sqrt(pi) exponents for the value's parity case. For Voronoi,
/// n = d and k is the face dimension.
inline std::vector<int> allowed_support(int n, int k, HalfInt param, StructureCase c) {
  bool rational = false;
  switch (c) {
    case StructureCase::I: rational = param.twice() % 4 != 0; break;            // alpha odd
    case StructureCase::ITilde: rational = param.twice() % 4 == 0; break;       // alpha even
    case StructureCase::J: rational = (param.twice() + n) % 2 == 0; break;      // 2beta + n even
    case StructureCase::JTilde: rational = (param.twice() - n) % 2 != 0; break;  // 2beta - n odd
    case StructureCase::Voronoi: rational = n % 2 == 0; break;
  }
  if (rational) {
    return {0};
  }
  std::vector<int> out;
  if (c == StructureCase::Voronoi) {
    for (int e = 2 * (n - k - 1); e <= 2 * (n - 1); ++e) {
      if (e % 4 == 0) {
        out.push_back(e);
      }
    }
    return out;
  }
  for (int e = -2 * (n - k); e <= 0; ++e) {
    if (e % 4 == 0) {
      out.push_back(e);
    }
  }
  return out;
}

inline StructureCheck arithmetic_structure_check(const PiExpr& value, int n, int k, HalfInt param, StructureCase c) {
  StructureCheck out;
  out.support = value.support();
  out.allowed = allowed_support(n, k, param, c);
  for (int e : out.support) {
    if (std::find(out.allowed.begin(), out.allowed.end(), e) == out.allowed.end()) {
      out.violations.push_back(e);
    }
  }
  out.pass = out.violations.empty();
  return out;
}

struct ConjectureEntry {
  std::string kind;  // "J", "J-tilde", "voronoi"
  int n = 0;
  int k = 0;
  HalfInt beta;
  int expected_sqrt_pi_exponent = 0;
  bool holds = false;
  PiExpr value;
};

struct ConjectureReport {
  std::vector<ConjectureEntry> entries;
  int failures() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.holds; }));
  }
};

inline bool is_monomial_at(const PiExpr& v, int sqrt_pi_exponent) {
  return v.is_zero() || (v.is_monomial() && v.terms()[0].first == sqrt_pi_exponent);
}

/// Reports whether the conjectured single-monomial forms hold. J over
/// 2beta in [twice_lo, twice_hi]; J-tilde over 2beta in [n, n + 6].
inline ConjectureReport conjecture_scan(AngleEngine& engine, int max_n, long twice_lo = -2, long twice_hi = 6) {
  ConjectureReport report;
  for (int n = 3; n <= max_n; ++n) {
    for (long tb = twice_lo; tb <= twice_hi; ++tb) {
      const HalfInt beta = HalfInt::from_twice(tb);
      if ((tb + n) % 2 == 0 || !AngleEngine::admissible(false, n, beta)) {
        continue;
      }
      for (int k = 1; k < n; ++k) {
        if ((n - k) % 2 == 0) {
          continue;
        }
        const PiExpr v = engine.big_J(n, k, beta);
        const int e = -2 * (n - k - 1);
        report.entries.push_back({"J", n, k, beta, e, is_monomial_at(v, e), v});
      }
    }
    for (long tb = n; tb <= n + 6; ++tb) {
      const HalfInt beta = HalfInt::from_twice(tb);
      if ((tb - n) % 2 != 0 || !AngleEngine::admissible(true, n, beta)) {
        continue;
      }
      for (int k = 2; k < n; k += 2) {
        const PiExpr v = engine.big_J_tilde(n, k, beta);
        const int e = (n - k) % 2 == 0 ? -2 * (n - k) : -2 * (n - k - 1);
        report.entries.push_back({"J-tilde", n, k, beta, e, is_monomial_at(v, e), v});
      }
    }
  }
  return report;
}

}  // namespace simplex_angles
