#pragma once

#include <iosfwd>
#include <string>

#include "liemult/bogomolov.hpp"
#include "liemult/catalog.hpp"

#include <json.hpp>

namespace liemult {

/// Algebra file schema (strict: unknown keys are rejected):
/// {
///   "name": string,
///   "dim": n,
///   "field": {"type": "Q"} | {"type": "Fp", "p": prime},
///   "brackets": [{"i": int, "j": int, "coeffs": [[k, value], ...]}, ...]
/// }
/// Indices are 1-based with i < j; values are exact rational strings over Q
/// ("-3/2") and integer residues (number or string) over Fp.
FieldSpec field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const FieldSpec& spec);

template <class F>
LieAlgebra<F> algebra_from_json(const nlohmann::json& j, const F& fld);
template <class F>
nlohmann::json algebra_to_json(const LieAlgebra<F>& L);

FieldSpec algebra_file_field(const nlohmann::json& j);
nlohmann::json parse_json_text(const std::string& text);

/// Report serialization: deterministic for a fixed (input, flags, seed).
nlohmann::json report_to_json(const std::string& algebra_name, std::size_t algebra_dim,
                              const MultiplierReport& rep);
std::string report_tsv_header();
std::string report_tsv_row(const std::string& algebra_name, const MultiplierReport& rep);

// --- template implementations ---

template <class F>
LieAlgebra<F> algebra_from_json(const nlohmann::json& j, const F& fld) {
  if (!j.is_object()) throw Error(Errc::BadInput, "algebra file: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "dim" && key != "field" && key != "brackets")
      throw Error(Errc::BadInput, "algebra file: unknown key '" + key + "'");
  }
  if (!j.contains("name") || !j["name"].is_string())
    throw Error(Errc::BadInput, "algebra file: missing string 'name'");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw Error(Errc::BadInput, "algebra file: missing nonnegative 'dim'");
  if (!j.contains("brackets") || !j["brackets"].is_array())
    throw Error(Errc::BadInput, "algebra file: missing array 'brackets'");

  const std::size_t n = j["dim"].get<std::size_t>();
  LieAlgebra<F> L(fld, j["name"].get<std::string>(), n);
  for (const auto& b : j["brackets"]) {
    if (!b.is_object()) throw Error(Errc::BadInput, "algebra file: bracket entries are objects");
    for (const auto& [key, value] : b.items()) {
      (void)value;
      if (key != "i" && key != "j" && key != "coeffs")
        throw Error(Errc::BadInput, "algebra file: unknown bracket key '" + key + "'");
    }
    if (!b.contains("i") || !b.contains("j") || !b.contains("coeffs") ||
        !b["i"].is_number_integer() || !b["j"].is_number_integer() || !b["coeffs"].is_array())
      throw Error(Errc::BadInput, "algebra file: bracket entries need i, j, coeffs");
    long i = b["i"].get<long>(), jj = b["j"].get<long>();
    if (i < 1 || jj < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(jj) > n)
      throw Error(Errc::BadInput, "algebra file: bracket index out of range");
    if (i >= jj) throw Error(Errc::BadInput, "algebra file: brackets need i < j");
    Vec<F> coeffs(n, fld.zero());
    for (const auto& term : b["coeffs"]) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
        throw Error(Errc::BadInput, "algebra file: coeff terms are [k, value] pairs");
      long k = term[0].get<long>();
      if (k < 1 || static_cast<std::size_t>(k) > n)
        throw Error(Errc::BadInput, "algebra file: coeff index out of range");
      if (term[1].is_string())
        coeffs[k - 1] = fld.from_string(term[1].get<std::string>());
      else if (term[1].is_number_integer())
        coeffs[k - 1] = fld.from_int(term[1].get<long>());
      else
        throw Error(Errc::BadInput, "algebra file: coeff values are strings or integers");
    }
    L.set_bracket(i - 1, jj - 1, std::move(coeffs));
  }
  return L;
}

template <class F>
nlohmann::json algebra_to_json(const LieAlgebra<F>& L) {
  const F& fld = L.field();
  nlohmann::json j;
  j["name"] = L.name();
  j["dim"] = L.dim();
  j["field"] = field_to_json(spec_of(fld));
  auto brackets = nlohmann::json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      auto v = L.bracket_basis(i, k);
      auto coeffs = nlohmann::json::array();
      for (std::size_t t = 0; t < L.dim(); ++t)
        if (!fld.is_zero(v[t]))
          coeffs.push_back(nlohmann::json::array({t + 1, fld.to_string(v[t])}));
      if (!coeffs.empty())
        brackets.push_back({{"i", i + 1}, {"j", k + 1}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  return j;
}

}  // namespace liemult
