#pragma once

#include "simplex_angles/gamma.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace simplex_angles {

using Json = nlohmann::json;

/// {"terms": [[e, "p/q"], ...]}, e ascending sqrt(pi) exponents.
inline Json to_json(const PiExpr& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms()) {
    terms.push_back(Json::array({e, to_fraction_string(c)}));
  }
  return Json{{"terms", terms}};
}

inline PiExpr pi_expr_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("PiExpr JSON needs a \"terms\" array");
  }
  std::vector<PiExpr::Term> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw std::invalid_argument("PiExpr term must be [int, \"p/q\"]");
    }
    terms.emplace_back(t[0].get<int>(), parse_rational(t[1].get<std::string>()));
  }
  return PiExpr::from_terms(std::move(terms));
}

inline Json to_json(const GammaProduct& g) {
  Json gamma = Json::array();
  for (const auto& [a, e] : g.gamma_factors()) {
    gamma.push_back(Json::array({to_fraction_string(a), e}));
  }
  Json powers = Json::array();
  for (const auto& [p, s] : g.power_factors()) {
    powers.push_back(Json::array({to_fraction_string(Rational(p)), to_fraction_string(s)}));
  }
  return Json{{"rational", to_fraction_string(g.rational_factor())},
              {"pi_exp", to_fraction_string(g.pi_exponent())},
              {"gamma", gamma},
              {"powers", powers}};
}

inline GammaProduct gamma_product_from_json(const Json& j) {
  GammaProduct out(parse_rational(j.at("rational").get<std::string>()));
  out *= GammaProduct::pi_power(parse_rational(j.at("pi_exp").get<std::string>()));
  for (const auto& g : j.at("gamma")) {
    out *= GammaProduct::gamma(parse_rational(g.at(0).get<std::string>()), g.at(1).get<long>());
  }
  for (const auto& p : j.at("powers")) {
    out *= GammaProduct::power(parse_rational(p.at(0).get<std::string>()), parse_rational(p.at(1).get<std::string>()));
  }
  return out;
}

}  // namespace simplex_angles
