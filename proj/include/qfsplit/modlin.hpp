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

#ifndef QFSPLIT_MODLIN_HPP
#define QFSPLIT_MODLIN_HPP

#include <optional>
#include <vector>

#include "qfsplit/modpoly.hpp"

namespace qfs {

/// How a span was constructed; the recursion distinguishes ideal slices
/// (closed under monomial multiplication up to the bound) from plain
/// module spans such as kernels.
enum class SpanProvenance { RAW, IDEAL_SLICE, MODULE_SLICE };

/// Canonical Howell-form basis of a Z/p^prec-submodule of the space of
/// polynomials of total degree <= degree_bound.  Rows are ordered by
/// strictly increasing leading monomial (graded-lex); each row's leading
/// coefficient is exactly p^j for some j; entries of earlier rows at
/// later pivot monomials are reduced below the pivot power.  Over the
/// chain ring Z/p^prec this form is unique per submodule, so equal spans
/// yield identical rows, and membership is decided by greedy leading-term
/// elimination.
struct SpanBasis {
    RingPtr cfg;
    unsigned prec = 1;
    std::uint32_t degree_bound = 0;
    SpanProvenance provenance = SpanProvenance::RAW;
    std::vector<ModPoly> rows;
};

/// Howell normal form of the span of the given rows (all reduced to
/// their minimum precision first).  Rows must have degree <= D.
SpanBasis howell_reduce(RingPtr cfg, std::vector<ModPoly> rows,
                        std::uint32_t D,
                        SpanProvenance provenance = SpanProvenance::RAW);

/// Convenience overload taking the ring from the first row.
SpanBasis howell_reduce(std::vector<ModPoly> rows, std::uint32_t D,
                        SpanProvenance provenance = SpanProvenance::RAW);

/// Degree-<=D slice of the ideal generated by gens: Howell form of
/// {x^a * g : g in gens, deg(x^a * g) <= D}.  Generators of degree > D
/// contribute nothing (no multiple fits the slice).  One-sided by
/// construction: elements reachable only through higher-degree
/// intermediates are missed.
SpanBasis ideal_slice(const std::vector<ModPoly>& gens, std::uint32_t D);

/// Exact membership of g in span(b) (over Z/p^prec of the basis).
/// g must have degree <= the basis bound and precision >= the basis
/// precision (it is reduced down before testing).
bool member(const SpanBasis& b, const ModPoly& g);

/// The submodule {v in span(b) : u_op(v) is divisible by p}, returned in
/// Howell form.  Computed by solving the mod-p linear constraint system
/// on the coefficients of u_op over the basis rows; the solution span is
/// generated by lifts of the mod-p kernel together with p * rows(b).
/// Requires precision >= 2 so that divisibility by p is a real condition.
SpanBasis kernel_under_u_mod_p(const SpanBasis& b);

/// A span element escaping (x_1^p, ..., x_k^p) + (p) if one exists:
/// the first basis row whose image modulo p and modulo the monomial
/// ideal is nonzero (the projection is linear, so the span escapes if
/// and only if some row does).
std::optional<ModPoly> escapes_mp_p(const SpanBasis& b);

/// Canonical reduced-row-echelon basis (over F_p, leading coefficient 1)
/// of the span's image modulo (x_1^p, ..., x_k^p, p).  The image lives in
/// the fixed space spanned by monomials with all exponents <= p-1, so
/// results from different degree bounds are directly comparable; used by
/// the degree-stability heuristic.
std::vector<ModPoly> projected_span_mod_p(const SpanBasis& b);

}  // namespace qfs

#endif  // QFSPLIT_MODLIN_HPP
