#include "alag/poly_json.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace alag {

nlohmann::json to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"e", {e.e[0], e.e[1], e.e[2], e.e[3]}}, {"c", c.get_str()}});
  }
  return {{"terms", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("polynomial JSON must be an object with a \"terms\" array");
  }
  Poly p;
  std::set<std::array<std::uint16_t, kNumVars>> seen;
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("e") || !term.contains("c")) {
      throw std::invalid_argument("polynomial term needs \"e\" and \"c\"");
    }
    const auto& ej = term.at("e");
    if (!ej.is_array() || ej.size() != kNumVars) {
      throw std::invalid_argument("exponent vector must have four entries");
    }
    Exponents e;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (!ej[i].is_number_unsigned() || ej[i].get<std::uint64_t>() > std::numeric_limits<std::uint16_t>::max()) {
        throw std::invalid_argument("exponent must be a small non-negative integer");
      }
      e.e[i] = ej[i].get<std::uint16_t>();
    }
    const auto& cj = term.at("c");
    if (!cj.is_string()) throw std::invalid_argument("coefficient must be a decimal string");
    Integer c;
    if (c.set_str(cj.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad coefficient \"" + cj.get<std::string>() + "\"");
    }
    if (c == 0) throw std::invalid_argument("zero coefficients are not stored");
    if (!seen.insert(e.e).second) throw std::invalid_argument("repeated exponent vector");
    p.add_term(e, c);
  }
  return p;
}

}  // namespace alag
