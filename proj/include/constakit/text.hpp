#pragma once

#include <string>
#include <string_view>

#include "constakit/field.hpp"
#include "constakit/poly.hpp"

namespace constakit {

// Element tokens: "V" (packed integer in [0, q), meaning c0 + c1*p + ...),
// "b^K" (generator power, "b" alone is b^1), and either form with a leading
// "-" for the additive inverse.
Felt parse_element(const Field& f, std::string_view token);

// Canonical token: the decimal packed value.  parse_element inverts it.
std::string format_element(const Felt& x);

// "0" or "b^k" with k the discrete log; display helper.
std::string format_element_pow(const Felt& x);

// Polynomials: comma-separated element tokens, constant term first.
// format_poly emits canonical tokens with no trailing zeros ("0" for the
// zero polynomial) and parse_poly inverts it exactly.
Poly parse_poly(const Field& f, std::string_view csv);
std::string format_poly(const Poly& g);

// Human form, e.g. "x^3 + 16x^2 + 21x + 4"; not meant to be parsed back.
std::string pretty_poly(const Poly& g);

}  // namespace constakit
