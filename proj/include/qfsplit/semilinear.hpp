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

#ifndef QFSPLIT_SEMILINEAR_HPP
#define QFSPLIT_SEMILINEAR_HPP

#include <map>

#include "qfsplit/modpoly.hpp"

namespace qfs {

/// Digit decomposition along the Frobenius lift: writes
///     a = sum over r in [0,p)^k of phi(c_r) * x^r
/// by splitting each exponent vector E = p*Q + R; bucket R receives the
/// term with exponent Q.  The map contains only the nonzero digits c_r.
std::map<ExponentVector, ModPoly, GradedLexLess>
digit_decompose(const ModPoly& a);

/// The top-digit projection u: the phi-semilinear splitting that extracts
/// the digit c_(p-1,...,p-1) of the decomposition above.  Concretely,
/// keeps exactly the terms whose exponents are all congruent to p-1
/// modulo p, remapped to E -> (E - (p-1,...,p-1)) / p.
/// Twisted linearity: u(phi(a) * b) = a * u(b).
ModPoly u_op(const ModPoly& a);

/// t-fold iterate of u_op (t = 0 returns a unchanged).
ModPoly u_iter(const ModPoly& a, unsigned t);

/// First p-derivation delta1(a) = (phi(a) - a^p) / p.  The difference is
/// coefficientwise divisible by p, and the quotient carries one digit of
/// precision less than a.  Requires prec(a) >= 2.
/// Laws: p*delta1(a) + a^p = phi(a), and
/// delta1(ab) = a^p delta1(b) + b^p delta1(a) + p delta1(a) delta1(b),
/// both at precision prec(a) - 1.
ModPoly delta1(const ModPoly& a);

}  // namespace qfs

#endif  // QFSPLIT_SEMILINEAR_HPP
