#include "feqlab/cli/json_io.hpp"

#include <cstdint>

namespace feqlab::cli {

Json to_json(const BigInt& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) != 0) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Json to_json(const BigRational& v) { return v.to_string(); }

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RationalFunction& f) {
  Json out = Json::object();
  out["num"] = to_json(f.numerator());
  out["den"] = to_json(f.denominator());
  return out;
}

Json to_json(const XPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) out[name] = value;
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace feqlab::cli
