#pragma once

// Polynomial expression grammar:
//
//   expr    := ['+' | '-'] term (('+' | '-') term)*
//   term    := factor (('*' factor) | ('/' INTEGER))*
//   factor  := primary ['^' INTEGER]
//   primary := INTEGER | VARIABLE | '(' expr ')'
//
// Juxtaposition is not multiplication: "2x" and "x y" are syntax errors.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fthresh/poly.hpp"

namespace fthresh {

template <class Field>
Poly<Field> parse_poly(std::string_view text, const RingPtr<Field>& ring);

extern template Poly<PrimeField> parse_poly(std::string_view, const RingPtr<PrimeField>&);
extern template Poly<RationalField> parse_poly(std::string_view, const RingPtr<RationalField>&);

using AnyPoly = std::variant<FpPoly, QPoly>;

/// Parse into the ring named by `domain` over the variables `vars`.
AnyPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, Domain domain);

FpPoly parse_fp(std::string_view text, const std::vector<std::string>& vars, Prime p);
QPoly parse_q(std::string_view text, const std::vector<std::string>& vars);

/// Identifiers appearing in `text`, sorted, without duplicates.
std::vector<std::string> scan_variables(std::string_view text);

}  // namespace fthresh
