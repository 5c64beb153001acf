/*
   Copyright 2026 the qfsplit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QFSPLIT_PARSE_HPP
#define QFSPLIT_PARSE_HPP

#include <string>

#include "qfsplit/modpoly.hpp"

// Polynomial expression text <-> ModPoly.  Grammar:
//     expr   := ['-']? term (('+'|'-') term)*
//     term   := factor ('*' factor)*
//     factor := base ('^' uint)?
//     base   := variable | uint | '(' expr ')'
// No implicit multiplication: "xy" is an unknown variable, not x*y.
// Unary minus maps a coefficient c to p^W - c.  Exponents are limited
// to 2^32; coefficient literals of any length reduce mod p^W.

namespace qfs {

/// Parses an expression over cfg's variables; the result carries the
/// full precision W.  Errors report the byte offset in the input.
ModPoly parse_poly(const std::string& text, RingPtr cfg);

/// Parses a string that must denote a single monomial with coefficient
/// one (e.g. "x^7*y^15*z" or "1") and returns its exponent vector.
ExponentVector parse_monomial(const std::string& text, RingPtr cfg);

/// Deterministic rendering: graded-lex descending terms joined by " + ",
/// canonical residue coefficients, "^" exponents, explicit "*".
/// parse_poly(format_poly(g)) == g.
std::string format_poly(const ModPoly& g);

/// Rendering of a single monomial ("1" for the empty exponent vector).
std::string format_monomial(const RingConfig& cfg, const ExponentVector& ev);

}  // namespace qfs

#endif  // QFSPLIT_PARSE_HPP
