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

#ifndef QFSPLIT_MODPOLY_HPP
#define QFSPLIT_MODPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qfsplit/ring.hpp"

namespace qfs {

/* exponent vectors */

/// Exponent vector of a monomial; one 32-bit entry per ring variable.
struct ExponentVector {
    std::vector<std::uint32_t> e;

    ExponentVector() = default;
    explicit ExponentVector(std::size_t k) : e(k, 0) {}
    explicit ExponentVector(std::vector<std::uint32_t> v) : e(std::move(v)) {}

    std::size_t size() const { return e.size(); }
    std::uint32_t operator[](std::size_t i) const { return e[i]; }
    std::uint32_t& operator[](std::size_t i) { return e[i]; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto x : e) d += x;
        return d;
    }

    /// Componentwise sum; throws on 32-bit overflow of any entry.
    ExponentVector plus(const ExponentVector& o) const;

    /// Componentwise difference; throws if any entry would go negative.
    ExponentVector minus(const ExponentVector& o) const;

    /// Base-p digit split E = p*Q + R with R componentwise in [0, p).
    std::pair<ExponentVector, ExponentVector> split(std::uint64_t p) const;

    /// Componentwise scaling by p (the Frobenius action on exponents).
    ExponentVector times(std::uint64_t p) const;

    /// True if every entry is <= bound.
    bool all_le(std::uint32_t bound) const {
        for (auto x : e)
            if (x > bound) return false;
        return true;
    }

    bool operator==(const ExponentVector& o) const { return e == o.e; }
};

/// Graded-lexicographic strict order: first by total degree, then by the
/// entry tuple.  Used everywhere a deterministic monomial order is needed.
struct GradedLexLess {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        std::uint64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

/// All exponent vectors in k variables of total degree <= D,
/// graded-lexicographically smallest first.
std::vector<ExponentVector> monomials_up_to(std::size_t k, std::uint32_t D);

/* sparse polynomials over Z/p^prec */

/// Sparse multivariate polynomial over Z/p^prec for some precision
/// prec <= W of its ring.  Terms are kept in a sorted map (graded-lex);
/// coefficients are canonical residues in [0, p^prec) and never zero.
/// Binary operations require the same ambient ring and produce results at
/// the minimum precision of their operands.
class ModPoly {
public:
    using TermMap = std::map<ExponentVector, std::uint64_t, GradedLexLess>;

    ModPoly(RingPtr cfg, unsigned prec);  // the zero polynomial

    static ModPoly constant(RingPtr cfg, unsigned prec, std::uint64_t c);
    static ModPoly monomial(RingPtr cfg, unsigned prec, ExponentVector ev,
                            std::uint64_t c = 1);

    const RingPtr& ring() const { return cfg_; }
    const RingConfig& cfg() const { return *cfg_; }
    unsigned prec() const { return prec_; }
    std::uint64_t modulus() const { return cfg_->pow_p(prec_); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    /// Total degree; 0 for the zero polynomial.
    std::uint64_t total_degree() const;

    /// Coefficient of the given monomial (0 if absent).
    std::uint64_t coeff(const ExponentVector& ev) const;

    /// Sets a coefficient (reduced mod p^prec; erases the term on 0).
    void set_coeff(const ExponentVector& ev, std::uint64_t c);

    /// Copy truncated to a lower precision s <= prec.
    ModPoly reduce_precision(unsigned s) const;

    /* arithmetic */

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator-() const;
    ModPoly operator*(const ModPoly& o) const;
    bool operator==(const ModPoly& o) const;

    /// Multiplication by a scalar residue.
    ModPoly scale(std::uint64_t c) const;

    /// Fast multiplication by the single term c * x^ev.
    ModPoly shifted(const ExponentVector& ev, std::uint64_t c = 1) const;

    /// m-th power by binary exponentiation (m = 0 gives 1).
    ModPoly pow(std::uint64_t m) const;

    /// Frobenius lift: x_i -> x_i^p on monomials, coefficients unchanged.
    /// Coincides with a |-> a^p modulo p.
    ModPoly frobenius_lift() const;

    /// Exact division by p; drops one precision digit.  Throws
    /// divisibility_error naming the first offending monomial, and
    /// precision_error if prec < 2.
    ModPoly divide_exact_by_p() const;

    /* ideal membership for the monomial-free cases */

    /// True if every coefficient is divisible by p^r, i.e. the polynomial
    /// lies in (p^r).  Requires r < prec so the test is meaningful.
    bool in_pr_ideal(unsigned r) const;

    /// True if the polynomial lies in (x_1^p, ..., x_k^p) + (p^s): every
    /// term has some exponent >= p or coefficient divisible by p^s.
    /// Requires s <= prec.
    bool in_mp_plus_ps(unsigned s) const;

    /// Graded-lex smallest monomial witnessing escape from
    /// (x_1^p, ..., x_k^p) + (p^s), if any: all exponents <= p-1 and
    /// coefficient nonzero mod p^s.
    std::optional<ExponentVector> escape_witness(unsigned s) const;

private:
    void check_same_ring(const ModPoly& o) const;

    RingPtr cfg_;
    unsigned prec_;
    TermMap terms_;
};

}  // namespace qfs

#endif  // QFSPLIT_MODPOLY_HPP
