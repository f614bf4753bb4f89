#pragma once

#include "simplex_angles/gamma.hpp"
#include "simplex_angles/half_int.hpp"
#include "simplex_angles/json_io.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"
#include "simplex_angles/trig_poly.hpp"

#include <compare>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace simplex_angles {

enum class Family { I, ITilde, J, JTilde };
enum class Provenance { Integral, Recursion, DirectSum, ClosedForm };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::ITilde: return "I-tilde";
    case Family::J: return "J";
    case Family::JTilde: return "J-tilde";
  }
  return "?";
}

inline Family family_from_string(const std::string& s) {
  if (s == "I") return Family::I;
  if (s == "I-tilde") return Family::ITilde;
  if (s == "J") return Family::J;
  if (s == "J-tilde") return Family::JTilde;
  throw std::invalid_argument("unknown family '" + s + "'");
}

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Integral: return "integral";
    case Provenance::Recursion: return "recursion";
    case Provenance::DirectSum: return "direct-sum";
    case Provenance::ClosedForm: return "closed-form";
  }
  return "?";
}

inline Provenance provenance_from_string(const std::string& s) {
  if (s == "integral") return Provenance::Integral;
  if (s == "recursion") return Provenance::Recursion;
  if (s == "direct-sum") return Provenance::DirectSum;
  if (s == "closed-form") return Provenance::ClosedForm;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

/// Parameter is alpha for I families and beta for J families, stored doubled.
struct TableKey {
  Family family;
  int n;
  int k;
  long twice_param;
  auto operator<=>(const TableKey&) const = default;
};

struct TableEntry {
  PiExpr value;
  Provenance provenance;
};

/// Memo store. Concurrent readers, serialized writers; an entry is visible
/// only once fully built, and a conflicting re-insert throws.
class AngleTable {
 public:
  std::optional<TableEntry> find(const TableKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  void insert(const TableKey& key, const PiExpr& value, Provenance provenance) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace(key, TableEntry{value, provenance});
    if (!inserted && it->second.value != value) {
      throw std::logic_error("table entry " + to_string(key.family) + "(" + std::to_string(key.n) + "," +
                             std::to_string(key.k) + ") recomputed to a different value: " +
                             it->second.value.to_string() + " vs " + value.to_string());
    }
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

  std::vector<std::pair<TableKey, TableEntry>> snapshot() const {
    std::shared_lock lock(mutex_);
    return {entries_.begin(), entries_.end()};
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<TableKey, TableEntry> entries_;
};

enum class JPath { Recursion, RecursionFull, Direct, DirectParity };

inline JPath jpath_from_string(const std::string& s) {
  if (s == "recursion") return JPath::Recursion;
  if (s == "recursion-full") return JPath::RecursionFull;
  if (s == "direct") return JPath::Direct;
  if (s == "direct-parity") return JPath::DirectParity;
  throw std::invalid_argument("unknown path '" + s + "'");
}

/// Exact I, I~, J, J~ with memoization in an AngleTable.
class AngleEngine {
 public:
  explicit AngleEngine(std::shared_ptr<AngleTable> table = std::make_shared<AngleTable>())
      : table_(std::move(table)) {}

  AngleTable& table() { return *table_; }
  const AngleTable& table() const { return *table_; }

  /// C(n,k) int c_{1,(alpha k-1)/2} cos^{alpha k} F_alpha^{n-k}.
  PiExpr big_I(int n, int k, int alpha) {
    check_nk(n, k);
    if (alpha < 0) {
      throw std::domain_error("I needs integer alpha >= 0, got " + std::to_string(alpha));
    }
    return external(false, n, k, alpha);
  }

  /// C(n,k) int c~_{1,(alpha k+1)/2} cos^{alpha k-1} F~_alpha^{n-k}.
  PiExpr big_I_tilde(int n, int k, int alpha) {
    check_nk(n, k);
    if (alpha < 1) {
      throw std::domain_error("I-tilde needs integer alpha >= 1, got " + std::to_string(alpha));
    }
    return external(true, n, k, alpha);
  }

  PiExpr big_J(int n, int k, HalfInt beta, JPath path = JPath::Recursion) {
    check_nk(n, k);
    check_beta(false, n, beta);
    return internal(false, n, k, beta, path);
  }

  PiExpr big_J_tilde(int n, int k, HalfInt beta, JPath path = JPath::Recursion) {
    check_nk(n, k);
    check_beta(true, n, beta);
    return internal(true, n, k, beta, path);
  }

  /// (J_{n,1}, ..., J_{n,n}) or the tilde analogue.
  std::vector<PiExpr> J_vector(bool tilde, int n, HalfInt beta, JPath path = JPath::Recursion) {
    std::vector<PiExpr> out;
    for (int k = 1; k <= n; ++k) {
      out.push_back(tilde ? big_J_tilde(n, k, beta, path) : big_J(n, k, beta, path));
    }
    return out;
  }

  /// The external-angle parameter driving every I in the J recursion.
  static long alpha_for(bool tilde, int n, HalfInt beta) {
    return tilde ? beta.twice() - n + 1 : beta.twice() + n - 1;
  }

  static bool admissible(bool tilde, int n, HalfInt beta) {
    if (tilde) {
      return alpha_for(true, n, beta) >= 1;
    }
    return beta.twice() >= -2 && (n <= 2 || alpha_for(false, n, beta) >= 0);
  }

 private:
  static void check_nk(int n, int k) {
    if (n < 1 || k < 1 || k > n) {
      throw std::domain_error("need n >= 1 and 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }

  static void check_beta(bool tilde, int n, HalfInt beta) {
    if (!admissible(tilde, n, beta)) {
      throw std::domain_error(std::string(tilde ? "J-tilde" : "J") + " parameter beta=" + beta.to_string() +
                              " is not admissible for n=" + std::to_string(n));
    }
  }

  /// J argument after stepping t dimensions down the recursion.
  static HalfInt shifted_beta(bool tilde, HalfInt beta, int t) {
    return beta.plus_halves(tilde ? -t : t);
  }

  const TrigPoly& cos_factor(bool tilde, int alpha, int k) {
    std::lock_guard lock(cache_mutex_);
    auto [it, inserted] = cos_cache_.try_emplace({tilde, alpha, k});
    if (inserted) {
      it->second = tilde ? cos_power_expand(alpha * k - 1) * c_tilde_one(make_rational(alpha * k + 1, 2))
                         : cos_power_expand(alpha * k) * c_one(make_rational(alpha * k - 1, 2));
    }
    return it->second;
  }

  /// F^j built as F^{j-1} * F, cached per (tilde, alpha).
  const TrigPoly& cdf_power(bool tilde, int alpha, int j) {
    std::lock_guard lock(cache_mutex_);
    auto& powers = cdf_cache_[{tilde, alpha}];
    if (powers.empty()) {
      powers.emplace_back(PiExpr(1));
      powers.push_back(tilde ? inner_cdf_tilde(alpha) : inner_cdf(alpha));
    }
    while (static_cast<int>(powers.size()) <= j) {
      powers.push_back(trig_mul(powers.back(), powers[1]));
    }
    return powers[j];
  }

  PiExpr external(bool tilde, int n, int k, int alpha) {
    const TableKey key{tilde ? Family::ITilde : Family::I, n, k, 2L * alpha};
    if (auto hit = table_->find(key)) {
      return hit->value;
    }
    const TrigPoly& weight = cos_factor(tilde, alpha, k);
    const TrigPoly& power = cdf_power(tilde, alpha, n - k);
    PiExpr value = integrate_product(weight, power) * Rational(binomial(n, k));
    table_->insert(key, value, Provenance::Integral);
    return value;
  }

  PiExpr I_for(bool tilde, int n, int k, long alpha) {
    return tilde ? big_I_tilde(n, k, static_cast<int>(alpha)) : big_I(n, k, static_cast<int>(alpha));
  }

  PiExpr internal(bool tilde, int n, int k, HalfInt beta, JPath path) {
    switch (path) {
      case JPath::Recursion: return recursion(tilde, n, k, beta);
      case JPath::RecursionFull: {
        std::map<std::tuple<int, int, long>, PiExpr> memo;
        return recursion_full(tilde, n, k, beta, memo);
      }
      case JPath::Direct: return direct(tilde, n, k, beta, false);
      case JPath::DirectParity: return direct(tilde, n, k, beta, true);
    }
    throw std::logic_error("unknown JPath");
  }

  static std::optional<PiExpr> short_circuit(int n, int k) {
    if (k == n || n <= 2) {
      return PiExpr(1);
    }
    if (k == n - 1) {
      return PiExpr(make_rational(n, 2));
    }
    return std::nullopt;
  }

  /// J = C(n,k)/2 - sum_{s=1}^{floor((n-k)/2)} I_{n,n-2s}(alpha) J_{n-2s,k}(beta +- s).
  PiExpr recursion(bool tilde, int n, int k, HalfInt beta) {
    if (auto v = short_circuit(n, k)) {
      return *v;
    }
    const TableKey key{tilde ? Family::JTilde : Family::J, n, k, beta.twice()};
    if (auto hit = table_->find(key)) {
      return hit->value;
    }
    const long alpha = alpha_for(tilde, n, beta);
    PiExpr value(make_rational(Integer(binomial(n, k)), 2));
    for (int s = 1; 2 * s <= n - k; ++s) {
      const PiExpr i = I_for(tilde, n, n - 2 * s, alpha);
      const PiExpr j = recursion(tilde, n - 2 * s, k, shifted_beta(tilde, beta, 2 * s));
      value -= i * j;
    }
    table_->insert(key, value, Provenance::Recursion);
    return value;
  }

  /// J = C(n,k) - sum_{s=1}^{n-k} I_{n,n-s}(alpha) J_{n-s,k}(beta +- s/2); local memo only.
  PiExpr recursion_full(bool tilde, int n, int k, HalfInt beta, std::map<std::tuple<int, int, long>, PiExpr>& memo) {
    if (auto v = short_circuit(n, k)) {
      return *v;
    }
    const auto key = std::make_tuple(n, k, beta.twice());
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    const long alpha = alpha_for(tilde, n, beta);
    PiExpr value(Rational(binomial(n, k)));
    for (int s = 1; s <= n - k; ++s) {
      value -= I_for(tilde, n, n - s, alpha) * recursion_full(tilde, n - s, k, shifted_beta(tilde, beta, s), memo);
    }
    memo.emplace(key, value);
    return value;
  }

  /// Sum over chains n = n_0 > n_1 > ... > n_l >= k of (-1)^l prod I C(n_l, k),
  /// each chain expanded on its own. With parity, steps are even, every chain
  /// ending at n_l = k carries an extra 1 (J_{k,k} = 1, not C(k,k)/2), and the
  /// sum is halved.
  PiExpr direct(bool tilde, int n, int k, HalfInt beta, bool parity) {
    if (n <= 2) {
      return PiExpr(1);
    }
    const long alpha = alpha_for(tilde, n, beta);
    PiExpr total;
    std::function<void(int, const PiExpr&, int)> walk = [&](int top, const PiExpr& product, int sign) {
      Rational leaf(binomial(top, k));
      if (parity && top == k) {
        leaf += 1;
      }
      total.add_scaled(product, Rational(sign) * leaf);
      for (int next = top - 1; next >= k; --next) {
        if (parity && (top - next) % 2 != 0) {
          continue;
        }
        walk(next, product * I_for(tilde, top, next, alpha), -sign);
      }
    };
    walk(n, PiExpr(1), 1);
    if (parity) {
      total *= Rational(1, 2);
    }
    return total;
  }

  std::shared_ptr<AngleTable> table_;
  std::mutex cache_mutex_;
  std::map<std::tuple<bool, int, int>, TrigPoly> cos_cache_;
  std::map<std::pair<bool, int>, std::deque<TrigPoly>> cdf_cache_;
};

/// Process-wide engine behind the free functions.
inline AngleEngine& default_engine() {
  static AngleEngine engine;
  return engine;
}

inline PiExpr big_I(int n, int k, int alpha) { return default_engine().big_I(n, k, alpha); }
inline PiExpr big_I_tilde(int n, int k, int alpha) { return default_engine().big_I_tilde(n, k, alpha); }
inline PiExpr big_J(int n, int k, HalfInt beta, JPath path = JPath::Recursion) {
  return default_engine().big_J(n, k, beta, path);
}
inline PiExpr big_J_tilde(int n, int k, HalfInt beta, JPath path = JPath::Recursion) {
  return default_engine().big_J_tilde(n, k, beta, path);
}
inline PiExpr big_J_direct(int n, int k, HalfInt beta, bool parity_restricted) {
  return default_engine().big_J(n, k, beta, parity_restricted ? JPath::DirectParity : JPath::Direct);
}
inline PiExpr big_J_tilde_direct(int n, int k, HalfInt beta, bool parity_restricted) {
  return default_engine().big_J_tilde(n, k, beta, parity_restricted ? JPath::DirectParity : JPath::Direct);
}

// Cache file ---------------------------------------------------------------

inline constexpr const char* kCacheSchema = "simplex-angles-cache/1";

inline Json table_to_json(const AngleTable& table) {
  Json entries = Json::array();
  for (const auto& [key, entry] : table.snapshot()) {
    entries.push_back(Json{{"key", Json::array({to_string(key.family), key.n, key.k, std::to_string(key.twice_param)})},
                           {"value", to_json(entry.value)},
                           {"provenance", to_string(entry.provenance)}});
  }
  return Json{{"schema", kCacheSchema}, {"entries", entries}};
}

/// Returns false (and loads nothing) for an unknown schema tag.
inline bool load_table_json(AngleTable& table, const Json& doc) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kCacheSchema) {
    return false;
  }
  for (const auto& e : doc.at("entries")) {
    const auto& k = e.at("key");
    const TableKey key{family_from_string(k.at(0).get<std::string>()), k.at(1).get<int>(), k.at(2).get<int>(),
                       std::stol(k.at(3).get<std::string>())};
    table.insert(key, pi_expr_from_json(e.at("value")), provenance_from_string(e.at("provenance").get<std::string>()));
  }
  return true;
}

}  // namespace simplex_angles
