#pragma once

#include <string>

#include "json.hpp"

#include "qpchar/combinat.hpp"
#include "qpchar/series.hpp"
#include "qpchar/verify.hpp"

namespace qpchar {

using Json = nlohmann::ordered_json;

/// {"order": N, "coeffs": ["1","1","2",...]} -- coefficients as decimal
/// strings so exactness survives any JSON tooling.
inline Json series_to_json(const TruncatedSeries& s) {
  Json j;
  j["order"] = s.order();
  Json coeffs = Json::array();
  for (const Integer& c : s.coefficients()) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline TruncatedSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") ||
      !j["order"].is_number_integer() || !j["coeffs"].is_array())
    throw std::invalid_argument("series_from_json: expected {\"order\", \"coeffs\"}");
  const int order = j["order"].get<int>();
  if (order < 0 || j["coeffs"].size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("series_from_json: coeffs length must be order+1");
  std::vector<Integer> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("series_from_json: coeffs must be strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  return TruncatedSeries(std::move(coeffs));
}

/// CSV coefficient table with the fixed header "n,coefficient".
inline std::string series_to_csv(const TruncatedSeries& s) {
  std::string out = "n,coefficient\n";
  for (int n = 0; n <= s.order(); ++n)
    out += std::to_string(n) + "," + s.coefficient(n).str() + "\n";
  return out;
}

inline Json monomial_to_json(const QPMonomial& m) {
  Json j;
  j["heis"] = m.heisenberg;
  j["charges"] = m.charges;
  j["degrees"] = m.degrees;
  return j;
}

/// Report JSON. Deliberately carries no timing field: verification output
/// must be byte-identical across runs for fixed inputs.
inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["label"] = r.label;
  j["status"] = r.ok() ? "match" : "mismatch";
  j["order"] = r.order;
  if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
  if (r.lhs) j["lhs"] = r.lhs->str();
  if (r.rhs) j["rhs"] = r.rhs->str();
  return j;
}

} // namespace qpchar
