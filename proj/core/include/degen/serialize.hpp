#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "degen/identity.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

// Text rendering for CSV cells and diagnostics.  Polynomials print as
// ascending powers with explicit separators, e.g. "1/6 + 1/2*l".  The
// variables are spelled "l", "x", "y"; exponents use "^".  The zero
// polynomial prints as "0".
std::string render_text(const Rational& value);
std::string render_text(const LambdaPoly& poly);
std::string render_text(const MultiPoly& poly);

// JSON encoding.  Rationals are "p/q" strings ("p" when the denominator is
// one, sign on the numerator).  A LambdaPoly is a flat ascending coefficient
// array; a MultiPoly nests arrays in the fixed variable order y -> x -> l.
// The zero polynomial encodes as [] at every level.
nlohmann::ordered_json to_json(const Rational& value);
nlohmann::ordered_json to_json(const LambdaPoly& poly);
nlohmann::ordered_json to_json(const MultiPoly& poly);

// Series encode as {"order": N, "coeffs": [...]} with one ring-element
// encoding per power of t from 0 through N.
nlohmann::ordered_json to_json(const TruncatedSeries<LambdaPoly>& series);
nlohmann::ordered_json to_json(const TruncatedSeries<MultiPoly>& series);

// One identity report per JSON line.  "counterexample" is null on success;
// on failure it carries the sweep point and both evaluated sides.
nlohmann::ordered_json to_json(const IdentityReport& report);

// Inverse of the encodings above; throws std::invalid_argument on
// malformed input.
Rational rational_from_json(const nlohmann::json& j);
LambdaPoly lambda_poly_from_json(const nlohmann::json& j);
MultiPoly multi_poly_from_json(const nlohmann::json& j);

}  // namespace degen
