#pragma once

#include <json.hpp>

#include <fstream>
#include <string>

#include "duflo/duflo_map.hpp"
#include "duflo/enveloping.hpp"
#include "duflo/lie_algebra.hpp"
#include "duflo/polynomial.hpp"

namespace duflo {

using Json = nlohmann::json;

// Algebra file schema:
//   {"name": string, "dim": n, "basis": [string...],
//    "brackets": [[i, j, [[k, "p/q"], ...]], ...]}
// 0-based indices, i < j only, coefficients as decimal fraction strings.

inline Json algebra_to_json(const StructureConstants& sc) {
  Json j;
  j["name"] = sc.name();
  j["dim"] = sc.dim();
  j["basis"] = sc.basis_names();
  Json brackets = Json::array();
  for (const auto& [key, comb] : sc.stored_brackets()) {
    Json terms = Json::array();
    for (const auto& [k, q] : comb) terms.push_back(Json::array({k, to_string(q)}));
    brackets.push_back(Json::array({key.first, key.second, terms}));
  }
  j["brackets"] = brackets;
  return j;
}

inline StructureConstants algebra_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra json: object expected");
  for (const char* key : {"name", "dim", "basis", "brackets"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("algebra json: missing '") + key + "'");
  const std::string name = j.at("name").get<std::string>();
  const unsigned dim = j.at("dim").get<unsigned>();
  const auto basis = j.at("basis").get<std::vector<std::string>>();
  if (basis.size() != dim) throw std::invalid_argument("algebra json: basis size != dim");
  StructureConstants::BracketMap brackets;
  for (const auto& entry : j.at("brackets")) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("algebra json: bracket entry must be [i, j, terms]");
    const std::uint32_t i = entry.at(0).get<std::uint32_t>();
    const std::uint32_t jj = entry.at(1).get<std::uint32_t>();
    if (!(i < jj) || jj >= dim)
      throw std::invalid_argument("algebra json: bracket indices must satisfy i < j < dim");
    if (brackets.count({i, jj}))
      throw std::invalid_argument("algebra json: duplicate bracket entry");
    StructureConstants::Combination comb;
    for (const auto& t : entry.at(2)) {
      if (!t.is_array() || t.size() != 2)
        throw std::invalid_argument("algebra json: bracket term must be [k, coeff]");
      const std::uint32_t k = t.at(0).get<std::uint32_t>();
      if (!t.at(1).is_string())
        throw std::invalid_argument("algebra json: coefficient must be a fraction string");
      comb.emplace_back(k, rational_from_string(t.at(1).get<std::string>()));
    }
    brackets[{i, jj}] = std::move(comb);
  }
  return StructureConstants(name, basis, std::move(brackets));
}

inline StructureConstants load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
  Json j;
  in >> j;
  return algebra_from_json(j);
}

// Polynomial schema: {"terms": [{"exps": [a_1..a_n], "coeff": "p/q"}, ...]}
// Exponents are 0-based over the algebra's basis order; for S(g*) they index
// the dual basis.

template <class Tag>
Json poly_to_json(const BasicPolynomial<Tag>& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["exps"] = m;
    t["coeff"] = to_string(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = terms;
  return j;
}

template <class Tag>
BasicPolynomial<Tag> poly_from_json(const Json& j, unsigned nvars) {
  if (!j.is_object() || !j.contains("terms"))
    throw std::invalid_argument("polynomial json: {\"terms\": [...]} expected");
  BasicPolynomial<Tag> f(nvars);
  for (const auto& t : j.at("terms")) {
    const Json& ej = t.at("exps");
    if (!ej.is_array() || ej.size() != nvars)
      throw std::invalid_argument("polynomial json: exponent length != algebra dimension");
    Monomial exps;
    exps.reserve(nvars);
    for (const auto& e : ej) {
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() > 1024)
        throw std::invalid_argument("polynomial json: exponents must be small non-negative integers");
      exps.push_back(e.get<std::uint32_t>());
    }
    if (!t.at("coeff").is_string())
      throw std::invalid_argument("polynomial json: coefficient must be a fraction string");
    f.add_term(std::move(exps), rational_from_string(t.at("coeff").get<std::string>()));
  }
  return f;
}

inline SymPolynomial sym_from_json(const Json& j, unsigned nvars) {
  return poly_from_json<PrimalBasisTag>(j, nvars);
}
inline DualPolynomial dual_from_json(const Json& j, unsigned nvars) {
  return poly_from_json<DualBasisTag>(j, nvars);
}

// EnvElement schema: {"words": [{"word": [i_1 <= ... <= i_k], "coeff": "p/q"}, ...]}

inline Json env_to_json(const EnvElement& u) {
  Json words = Json::array();
  for (const auto& [w, c] : u.terms()) {
    Json t;
    t["word"] = w;
    t["coeff"] = to_string(c);
    words.push_back(std::move(t));
  }
  Json j;
  j["words"] = words;
  return j;
}

inline EnvElement env_from_json(const Json& j, unsigned dim) {
  if (!j.is_object() || !j.contains("words"))
    throw std::invalid_argument("env element json: {\"words\": [...]} expected");
  EnvElement u(dim);
  for (const auto& t : j.at("words")) {
    const auto w = t.at("word").get<Word>();
    if (!is_weakly_increasing(w))
      throw std::invalid_argument("env element json: word must be weakly increasing");
    if (!t.at("coeff").is_string())
      throw std::invalid_argument("env element json: coefficient must be a fraction string");
    u.add_term(w, rational_from_string(t.at("coeff").get<std::string>()));
  }
  return u;
}

}  // namespace duflo
