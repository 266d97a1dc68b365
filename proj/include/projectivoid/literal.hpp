#pragma once

// Text forms of exponents, coefficients and series.
//
//   series  := term (('+' | '-') term)*  [ '(' 'mod' 'val' '>=' int ')' ]
//   term    := coeff | coeff '*' mono | mono
//   mono    := 'v' | 'v' '^' exp | 'v' '^' '(' exp ')'
//   exp     := int | int '/' int '^' int
//   coeff   := int | int '/' int
//
// Whitespace is insignificant, a leading sign is allowed on the first term,
// and exponent denominators must be powers of the session prime. The
// trailing precision clause is what the printer emits for inexact series.
// Printing lists terms by ascending exponent with coefficients in lowest
// terms, so print(parse(s)) is a canonical form.

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "projectivoid/exponent.hpp"
#include "projectivoid/series.hpp"

namespace projectivoid {

PExp parse_exponent(std::string_view text, Prime p);
mpq_class parse_coefficient(std::string_view text);

/// `variable` selects the indeterminate letter; 's' is used for classical
/// Laurent polynomials.
PSeries parse_series(std::string_view text, Prime p, char variable = 'v');

std::string to_string(const PExp& e);
std::string to_string(const mpq_class& c);
std::string to_string(const PSeries& f, char variable = 'v');
std::string to_string(const ResiduePoly& f);

}  // namespace projectivoid
