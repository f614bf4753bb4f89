#pragma once

#include "simplex_angles/angle_tables.hpp"
#include "simplex_angles/applications.hpp"
#include "simplex_angles/decimal.hpp"
#include "simplex_angles/half_int.hpp"
#include "simplex_angles/json_io.hpp"
#include "simplex_angles/oracle/monte_carlo.hpp"
#include "simplex_angles/oracle/quadrature.hpp"
#include "simplex_angles/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplex_angles::cli {

enum class OutputMode { Exact, Decimal, Both };

struct CliConfig {
  OutputMode mode = OutputMode::Exact;
  int digits = 30;
  std::optional<std::string> cache_path;
  bool json = false;
};

inline constexpr const char* kDigitsEnv = "SIMPLEX_ANGLES_DIGITS";
inline constexpr int kVoronoiGuard = 12;

/// Raised by a command whose checks found a nonzero residual.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline int parse_int_exact(const std::string& text, const char* what) {
  const Rational q = parse_rational(text);
  if (!is_integer(q) || !q.get_num().fits_sint_p()) {
    throw std::invalid_argument(std::string(what) + " must be an integer, got '" + text + "'");
  }
  return static_cast<int>(q.get_num().get_si());
}

/// Strict real parse for oracle parameters: the whole string must be consumed.
inline double parse_real(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be a real number, got '" + text + "'");
  }
  return v;
}

inline std::string format_double(double v, int digits = 17) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

class Printer {
 public:
  Printer(const CliConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  std::string text(const PiExpr& v) const {
    switch (cfg_.mode) {
      case OutputMode::Exact: return v.to_string();
      case OutputMode::Decimal: return pi_eval(v, cfg_.digits);
      case OutputMode::Both: return v.to_string() + "  ~ " + pi_eval(v, cfg_.digits);
    }
    return {};
  }

  std::string text(const GammaProduct& g) const {
    switch (cfg_.mode) {
      case OutputMode::Exact: return g.to_string();
      case OutputMode::Decimal: return gp_eval(g, cfg_.digits);
      case OutputMode::Both: return g.to_string() + "  ~ " + gp_eval(g, cfg_.digits);
    }
    return {};
  }

  Json json(const PiExpr& v) const {
    Json j = to_json(v);
    j["string"] = v.to_string();
    if (cfg_.mode != OutputMode::Exact) {
      j["decimal"] = pi_eval(v, cfg_.digits);
    }
    return j;
  }

  Json json(const GammaProduct& g) const {
    Json j = to_json(g);
    j["string"] = g.to_string();
    if (cfg_.mode != OutputMode::Exact) {
      j["decimal"] = gp_eval(g, cfg_.digits);
    }
    return j;
  }

  bool decimals() const { return cfg_.mode != OutputMode::Exact; }
  int digits() const { return cfg_.digits; }
  bool as_json() const { return cfg_.json; }
  void emit(const Json& j) const { out_ << j.dump(2) << '\n'; }
  std::ostream& out() const { return out_; }

 private:
  const CliConfig& cfg_;
  std::ostream& out_;
};

struct Params {
  std::string n = "0", k = "0", alpha = "0", beta = "0", dim = "0", family = "beta", path = "recursion";
  std::string tol = "1e-10", seed = "1", simplices = "2000", directions = "20000", threads = "0", max_n = "0";
  bool tilde = false;
  bool allow_large = false;
  bool shared_directions = false;
};

inline int cmd_I(AngleEngine& engine, const Printer& p, const Params& a, bool tilde) {
  const int n = parse_int_exact(a.n, "--n");
  const int k = parse_int_exact(a.k, "--k");
  const int alpha = parse_int_exact(a.alpha, "--alpha");
  const PiExpr v = tilde ? engine.big_I_tilde(n, k, alpha) : engine.big_I(n, k, alpha);
  if (p.as_json()) {
    p.emit(Json{{"command", tilde ? "I-tilde" : "I"}, {"n", n}, {"k", k}, {"alpha", alpha}, {"value", p.json(v)}});
  } else {
    p.out() << p.text(v) << '\n';
  }
  return 0;
}

inline int cmd_J(AngleEngine& engine, const Printer& p, const Params& a, bool tilde) {
  const int n = parse_int_exact(a.n, "--n");
  const int k = parse_int_exact(a.k, "--k");
  const HalfInt beta = HalfInt::parse(a.beta);
  const JPath path = jpath_from_string(a.path);
  const PiExpr v = tilde ? engine.big_J_tilde(n, k, beta, path) : engine.big_J(n, k, beta, path);
  if (p.as_json()) {
    p.emit(Json{{"command", tilde ? "J-tilde" : "J"},
                {"n", n},
                {"k", k},
                {"beta", beta.to_string()},
                {"path", a.path},
                {"value", p.json(v)}});
  } else {
    p.out() << p.text(v) << '\n';
  }
  return 0;
}

inline int cmd_voronoi(AngleEngine& engine, const Printer& p, const Params& a, std::ostream& err) {
  const int d = parse_int_exact(a.dim, "--dim");
  if (d > kVoronoiGuard && !a.allow_large) {
    throw std::domain_error("--dim above " + std::to_string(kVoronoiGuard) + " needs --allow-large");
  }
  const FVector f = voronoi_f_vector(engine, d);
  const auto checks = voronoi_structure(f);
  for (int k = 0; k < d; ++k) {
    if (!checks[k].pass) {
      err << "warning: f_" << k << " has sqrt(pi) exponents outside the expected support\n";
    }
  }
  if (p.as_json()) {
    Json entries = Json::array();
    for (const PiExpr& e : f.entries) {
      entries.push_back(p.json(e));
    }
    p.emit(Json{{"command", "voronoi"}, {"dim", d}, {"entries", entries}});
  } else {
    for (int k = 0; k < d; ++k) {
      p.out() << "f_" << k << " = " << p.text(f.entries[k]) << '\n';
    }
  }
  return 0;
}

inline int cmd_reitzner(AngleEngine& engine, const Printer& p, const Params& a, bool sphere) {
  const int d = parse_int_exact(a.dim, "--dim");
  if (sphere) {
    const std::vector<PiExpr> v = reitzner_sphere(engine, d);
    if (p.as_json()) {
      Json entries = Json::array();
      for (const PiExpr& e : v) {
        entries.push_back(p.json(e));
      }
      p.emit(Json{{"command", "reitzner-sphere"}, {"dim", d}, {"entries", entries}});
    } else {
      for (int k = 0; k < d; ++k) {
        p.out() << "C*_" << d << "," << k << " = " << p.text(v[k]) << '\n';
      }
    }
    return 0;
  }
  const ReitznerResult r = reitzner_ball(engine, d);
  if (p.as_json()) {
    Json vec = Json::array();
    for (const PiExpr& e : r.vector) {
      Json j = p.json(e);
      if (p.decimals()) {
        j["constant"] = product_eval(r.prefactor, e, p.digits());
      }
      vec.push_back(j);
    }
    p.emit(Json{{"command", "reitzner-ball"}, {"dim", d}, {"prefactor", p.json(r.prefactor)}, {"vector", vec}});
  } else {
    p.out() << "prefactor = " << p.text(r.prefactor) << '\n';
    for (int k = 0; k < d; ++k) {
      p.out() << "C_" << d << "," << k << " = prefactor * (" << r.vector[k].to_string() << ")";
      if (p.decimals()) {
        p.out() << "  ~ " << product_eval(r.prefactor, r.vector[k], p.digits());
      }
      p.out() << '\n';
    }
  }
  return 0;
}

inline int cmd_verify(AngleEngine& engine, const Printer& p, const Params& a) {
  const int n = parse_int_exact(a.n, "--n");
  const HalfInt beta = HalfInt::parse(a.beta);
  const Distribution family = distribution_from_string(a.family);
  const bool tilde = family == Distribution::BetaPrime;
  const RelationReport report = verify_relations(engine, n, beta, family);

  struct Check {
    std::string what;
    StructureCheck result;
  };
  std::vector<Check> structure;
  const long alpha = AngleEngine::alpha_for(tilde, n, beta);
  const std::vector<PiExpr> row = engine.J_vector(tilde, n, beta);
  for (int k = 1; k <= n; ++k) {
    const std::string label = std::to_string(n) + "," + std::to_string(k);
    structure.push_back({(tilde ? "J-tilde_" : "J_") + label,
                         arithmetic_structure_check(row[k - 1], n, k, beta, tilde ? StructureCase::JTilde : StructureCase::J)});
    const PiExpr i = tilde ? engine.big_I_tilde(n, k, static_cast<int>(alpha)) : engine.big_I(n, k, static_cast<int>(alpha));
    structure.push_back({(tilde ? "I-tilde_" : "I_") + label,
                         arithmetic_structure_check(i, n, k, HalfInt::integer(alpha), tilde ? StructureCase::ITilde : StructureCase::I)});
  }
  const bool structure_ok = std::all_of(structure.begin(), structure.end(), [](const Check& c) { return c.result.pass; });
  const bool ok = report.ok() && structure_ok;

  if (p.as_json()) {
    Json residuals = Json::array();
    for (const Residual& r : report.residuals) {
      residuals.push_back(Json{{"relation", r.relation}, {"row", r.row}, {"col", r.col}, {"value", r.value.to_string()}});
    }
    Json checks = Json::array();
    for (const Check& c : structure) {
      checks.push_back(Json{{"entry", c.what}, {"pass", c.result.pass}, {"support", c.result.support}, {"allowed", c.result.allowed}});
    }
    p.emit(Json{{"command", "verify"},
                {"n", n},
                {"beta", beta.to_string()},
                {"family", to_string(family)},
                {"alpha", alpha},
                {"ok", ok},
                {"residuals", residuals},
                {"structure", checks}});
  } else {
    for (const Residual& r : report.residuals) {
      p.out() << r.relation << " (" << r.row << "," << r.col << "): " << r.value.to_string() << '\n';
    }
    for (const Check& c : structure) {
      p.out() << "structure " << c.what << ": " << (c.result.pass ? "pass" : "FAIL") << '\n';
    }
    p.out() << (ok ? "OK" : "FAILED") << '\n';
  }
  if (!ok) {
    throw VerificationFailure("nonzero residual or structure violation");
  }
  return 0;
}

inline int cmd_conjectures(AngleEngine& engine, const Printer& p, const Params& a) {
  const int max_n = parse_int_exact(a.max_n, "--max-n");
  if (max_n < 3) {
    throw std::domain_error("--max-n must be at least 3");
  }
  ConjectureReport report = conjecture_scan(engine, max_n);
  for (int d = 3; d <= std::min(max_n, kVoronoiGuard); d += 2) {
    append_voronoi_conjecture(report, voronoi_f_vector(engine, d));
  }
  if (p.as_json()) {
    Json entries = Json::array();
    for (const ConjectureEntry& e : report.entries) {
      entries.push_back(Json{{"kind", e.kind},
                             {"n", e.n},
                             {"k", e.k},
                             {"beta", e.beta.to_string()},
                             {"expected_sqrt_pi_exponent", e.expected_sqrt_pi_exponent},
                             {"holds", e.holds},
                             {"value", e.value.to_string()}});
    }
    p.emit(Json{{"command", "conjectures"}, {"max_n", max_n}, {"failures", report.failures()}, {"entries", entries}});
  } else {
    for (const ConjectureEntry& e : report.entries) {
      p.out() << e.kind << " n=" << e.n << " k=" << e.k;
      if (e.kind != "voronoi") {
        p.out() << " beta=" << e.beta.to_string();
      }
      p.out() << ": " << (e.holds ? "holds" : "DOES NOT HOLD") << "  " << e.value.to_string() << '\n';
    }
    p.out() << report.entries.size() << " instances, " << report.failures() << " failures\n";
  }
  return 0;
}

inline int cmd_quad(AngleEngine& engine, const Printer& p, const Params& a) {
  const int n = parse_int_exact(a.n, "--n");
  const int k = parse_int_exact(a.k, "--k");
  const double alpha = parse_real(a.alpha, "--alpha");
  const double tol = parse_real(a.tol, "--tol");
  if (!(tol >= 1e-20) || tol >= 1) {
    throw std::domain_error("--tol must lie in [1e-20, 1)");
  }
  const auto q = a.tilde ? oracle::quad_I_tilde<double>(n, k, alpha, tol) : oracle::quad_I<double>(n, k, alpha, tol);
  std::optional<PiExpr> exact;
  if (alpha == std::floor(alpha) && std::abs(alpha) < 1e6) {
    const int ia = static_cast<int>(alpha);
    exact = a.tilde ? engine.big_I_tilde(n, k, ia) : engine.big_I(n, k, ia);
  }
  const std::optional<double> rel =
      exact ? std::optional<double>(std::abs(q.value - to_double(*exact)) / std::abs(to_double(*exact))) : std::nullopt;
  if (p.as_json()) {
    Json j{{"command", "oracle quad-i"},
           {"params", {{"n", n}, {"k", k}, {"alpha", alpha}, {"tol", tol}, {"tilde", a.tilde}}},
           {"value", q.value},
           {"error_estimate", q.error_estimate},
           {"evaluations", q.evaluations},
           {"converged", q.converged}};
    if (exact) {
      j["exact"] = p.json(*exact);
      j["relative_difference"] = *rel;
    }
    p.emit(j);
  } else {
    p.out() << "quadrature: " << format_double(q.value) << " +- " << format_double(q.error_estimate, 3)
            << (q.converged ? "" : " (NOT CONVERGED)") << '\n';
    if (exact) {
      p.out() << "exact: " << p.text(*exact) << '\n';
      p.out() << "relative difference: " << format_double(*rel, 3) << '\n';
    }
  }
  if (!q.converged) {
    throw VerificationFailure("quadrature did not converge");
  }
  return 0;
}

inline int cmd_mc(AngleEngine& engine, const Printer& p, const Params& a) {
  oracle::McOptions o;
  o.n = parse_int_exact(a.n, "--n");
  const Distribution family = distribution_from_string(a.family);
  o.family = family == Distribution::Beta ? oracle::SampleFamily::Beta : oracle::SampleFamily::BetaPrime;
  o.beta = parse_real(a.beta, "--beta");
  o.n_simplices = parse_int_exact(a.simplices, "--simplices");
  o.n_directions = parse_int_exact(a.directions, "--directions");
  o.seed = std::stoull(a.seed);
  o.threads = static_cast<unsigned>(parse_int_exact(a.threads, "--threads"));
  o.shared_directions = a.shared_directions;
  const oracle::McResult r = oracle::mc_vertex_angle(o);

  std::optional<PiExpr> exact;
  try {
    const HalfInt hb = HalfInt::parse(a.beta);
    const bool tilde = family == Distribution::BetaPrime;
    if (AngleEngine::admissible(tilde, o.n, hb)) {
      exact = tilde ? engine.big_J_tilde(o.n, 1, hb) : engine.big_J(o.n, 1, hb);
    }
  } catch (const std::exception&) {
    // Non half-integer beta: no symbolic target.
  }
  const std::optional<double> z =
      exact && r.stderr_ > 0 ? std::optional<double>((r.estimate - to_double(*exact)) / r.stderr_) : std::nullopt;
  if (p.as_json()) {
    Json j{{"command", "oracle mc"},
           {"params",
            {{"n", o.n},
             {"family", a.family},
             {"beta", o.beta},
             {"simplices", o.n_simplices},
             {"directions", o.n_directions},
             {"shared_directions", o.shared_directions}}},
           {"seed", r.seed},
           {"estimate", r.estimate},
           {"stderr", r.stderr_},
           {"accepted_simplices", r.n_simplices},
           {"rejected", r.rejected},
           {"near_boundary", r.near_boundary}};
    if (exact) {
      j["exact"] = p.json(*exact);
    }
    if (z) {
      j["z"] = *z;
    }
    p.emit(j);
  } else {
    p.out() << "estimate: " << format_double(r.estimate, 10) << " +- " << format_double(r.stderr_, 3) << " (seed "
            << r.seed << ", " << r.n_simplices << " simplices, " << r.rejected << " rejected)\n";
    if (exact) {
      p.out() << "exact: " << p.text(*exact) << '\n';
    }
    if (z) {
      p.out() << "z-score: " << format_double(*z, 3) << '\n';
    }
  }
  return 0;
}

inline void load_cache(AngleTable& table, const std::string& path, std::ostream& err) {
  if (!std::filesystem::exists(path)) {
    return;
  }
  std::ifstream in(path);
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded()) {
    err << "warning: cache " << path << " is not valid JSON, ignoring it\n";
    return;
  }
  try {
    if (!load_table_json(table, doc)) {
      err << "warning: cache " << path << " has an unknown schema, ignoring it\n";
    }
  } catch (const std::exception& e) {
    err << "warning: cache " << path << " is malformed (" << e.what() << "), ignoring it\n";
  }
}

inline void save_cache(const AngleTable& table, const std::string& path, std::ostream& err) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << table_to_json(table).dump() << '\n';
    if (!out) {
      err << "warning: could not write cache " << path << '\n';
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    err << "warning: could not write cache " << path << ": " << ec.message() << '\n';
  }
}

}  // namespace detail

/// Runs one command; args exclude the program name. Exit codes: 0 success,
/// 1 usage or domain error, 2 verification failure.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  detail::Params a;
  std::string mode = "exact";

  CLI::App app{"Expected angle sums of beta and beta' random simplices, exactly.", "simplex-angles"};
  app.require_subcommand(1);
  app.add_option("--mode", mode, "Output mode")->check(CLI::IsMember({"exact", "decimal", "both"}));
  app.add_option("--digits", cfg.digits, "Significant digits for decimal output")
      ->envname(kDigitsEnv)
      ->check(CLI::Range(1, 100000));
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_option("--cache", cfg.cache_path, "Persistent table cache file");

  auto nk = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--n", a.n, "Number of points")->required();
    sub->add_option("--k", a.k, "Face vertex count")->required();
  };
  auto* I = app.add_subcommand("I", "Expected external angle sum I_{n,k}(alpha)");
  auto* It = app.add_subcommand("I-tilde", "Expected external angle sum I~_{n,k}(alpha)");
  for (auto* s : {I, It}) {
    nk(s);
    s->add_option("--alpha", a.alpha, "Integer alpha")->required();
  }
  auto* J = app.add_subcommand("J", "Expected internal angle sum J_{n,k}(beta)");
  auto* Jt = app.add_subcommand("J-tilde", "Expected internal angle sum J~_{n,k}(beta)");
  for (auto* s : {J, Jt}) {
    nk(s);
    s->add_option("--beta", a.beta, "Half-integer beta, e.g. -1, 1/2, 5/2")->required();
    s->add_option("--path", a.path, "Computation path")
        ->check(CLI::IsMember({"recursion", "recursion-full", "direct", "direct-parity"}));
  }
  auto* vor = app.add_subcommand("voronoi", "Expected f-vector of the typical Poisson-Voronoi cell");
  vor->fallthrough();
  vor->add_option("--dim", a.dim)->required();
  vor->add_flag("--allow-large", a.allow_large, "Allow dimensions above the default guard");

  auto* rei = app.add_subcommand("reitzner", "Limit constants for random polytopes");
  rei->fallthrough();
  rei->require_subcommand(1);
  auto* ball = rei->add_subcommand("ball", "Uniform points in a smooth convex body (unit-ball normalization)");
  auto* sph = rei->add_subcommand("sphere", "Uniform points on the sphere");
  for (auto* s : {ball, sph}) {
    s->fallthrough();
    s->add_option("--dim", a.dim)->required();
  }

  auto* ver = app.add_subcommand("verify", "Exact relation, matrix and structure checks");
  ver->fallthrough();
  ver->add_option("--n", a.n)->required();
  ver->add_option("--beta", a.beta)->required();
  ver->add_option("--family", a.family)->check(CLI::IsMember({"beta", "beta-prime"}));

  auto* con = app.add_subcommand("conjectures", "Report the single-monomial conjectures");
  con->fallthrough();
  con->add_option("--max-n", a.max_n)->required();

  auto* ora = app.add_subcommand("oracle", "Numerical cross-checks");
  ora->fallthrough();
  ora->require_subcommand(1);
  auto* quad = ora->add_subcommand("quad-i", "Nested quadrature of I_{n,k}(alpha), real alpha");
  nk(quad);
  quad->add_option("--alpha", a.alpha)->required();
  quad->add_option("--tol", a.tol, "Relative tolerance");
  quad->add_flag("--tilde", a.tilde, "Integrate I~ instead of I");
  auto* mc = ora->add_subcommand("mc", "Monte Carlo estimate of J_{n,1}(beta)");
  mc->fallthrough();
  mc->add_option("--n", a.n)->required();
  mc->add_option("--family", a.family)->check(CLI::IsMember({"beta", "beta-prime"}));
  mc->add_option("--beta", a.beta)->required();
  mc->add_option("--simplices", a.simplices);
  mc->add_option("--directions", a.directions);
  mc->add_option("--seed", a.seed);
  mc->add_option("--threads", a.threads, "Worker threads (0 = all cores); results do not depend on it");
  mc->add_flag("--shared-directions", a.shared_directions, "Reuse one direction set for all simplices");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  cfg.mode = mode == "decimal" ? OutputMode::Decimal : mode == "both" ? OutputMode::Both : OutputMode::Exact;

  auto table = std::make_shared<AngleTable>();
  if (cfg.cache_path) {
    detail::load_cache(*table, *cfg.cache_path, err);
  }
  AngleEngine engine(table);
  const detail::Printer printer(cfg, out);

  int code = 0;
  try {
    if (*I) code = detail::cmd_I(engine, printer, a, false);
    else if (*It) code = detail::cmd_I(engine, printer, a, true);
    else if (*J) code = detail::cmd_J(engine, printer, a, false);
    else if (*Jt) code = detail::cmd_J(engine, printer, a, true);
    else if (*vor) code = detail::cmd_voronoi(engine, printer, a, err);
    else if (*ball) code = detail::cmd_reitzner(engine, printer, a, false);
    else if (*sph) code = detail::cmd_reitzner(engine, printer, a, true);
    else if (*ver) code = detail::cmd_verify(engine, printer, a);
    else if (*con) code = detail::cmd_conjectures(engine, printer, a);
    else if (*quad) code = detail::cmd_quad(engine, printer, a);
    else if (*mc) code = detail::cmd_mc(engine, printer, a);
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    code = 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (cfg.cache_path) {
    detail::save_cache(*table, *cfg.cache_path, err);
  }
  return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + std::min(argc, 1), argv + argc), out, err);
}

}  // namespace simplex_angles::cli
