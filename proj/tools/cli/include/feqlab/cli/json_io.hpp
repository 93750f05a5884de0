#pragma once

#include <nlohmann/json.hpp>

#include "feqlab/big_rational.hpp"
#include "feqlab/int_polynomial.hpp"
#include "feqlab/rational_function.hpp"
#include "feqlab/report.hpp"
#include "feqlab/x_polynomial.hpp"

namespace feqlab::cli {

using Json = nlohmann::ordered_json;

// Canonical encodings shared by every report:
//   integers    JSON numbers when they fit in int64, decimal strings otherwise
//   rationals   "num/den" strings
//   Z[q]        ascending coefficient arrays
//   Q(q)        {"num": [...], "den": [...]}
//   Q(q)[x]     ascending array of Q(q) objects

Json to_json(const BigInt& v);
Json to_json(const BigRational& v);
Json to_json(const IntPolynomial& p);
Json to_json(const RationalFunction& f);
Json to_json(const XPolynomial& p);
Json to_json(const Params& params);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// RFC 4180 quoting for a single CSV field.
std::string csv_field(std::string_view text);

}  // namespace feqlab::cli
