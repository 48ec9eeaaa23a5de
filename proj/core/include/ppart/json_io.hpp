#pragma once

#include <string>
#include <string_view>

#include "ppart/coeff_ring.hpp"
#include "ppart/root_data.hpp"
#include "ppart/weight_polynomial.hpp"

namespace ppart {

/// {"monomials":[{"int":k,"q":e,"gauss":[{"t":t,"c":c,"pow":m}]}]} in
/// canonical order. Compact, no whitespace.
std::string coeff_to_json(const CoeffElement& c);
/// Inverse of coeff_to_json; symbols get modulus n.
CoeffElement coeff_from_json(std::string_view text, int n);

/// {"family":..,"rank":..,"n":..,"lambda":[..],"terms":[{"wt":[..],"coeff":{..}}]}
/// with terms in descending weight order. n = 0 marks a character.
std::string polynomial_to_json(const RootSystem& rs, const Weight& lam, int n, const WeightPolynomial& p);

/// Aligned text table: one term per line, weight then coefficient.
std::string polynomial_to_text(const RootSystem& rs, const WeightPolynomial& p);

}  // namespace ppart
