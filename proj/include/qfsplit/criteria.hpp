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

#ifndef QFSPLIT_CRITERIA_HPP
#define QFSPLIT_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "qfsplit/modlin.hpp"
#include "qfsplit/modpoly.hpp"
#include "qfsplit/semilinear.hpp"

// Decision procedures for F-purity, n-quasi-F^e-splitting and
// n-quasi-F-regularity of a hypersurface R = A/(f), A = (Z/p^W)[x_1..x_k]:
// the classical F-purity test, the level-n ideal recursion giving
// necessary conditions and the quasi-F-split height, and witness searches
// for the sufficient conditions built from the digit-extraction operator.

namespace qfs {

enum class VerdictKind {
    F_PURE,
    NOT_F_PURE,
    QFE_SPLIT_CERTIFIED,
    NOT_QFE_SPLIT_UP_TO_DEGREE,
    QFR_CERTIFIED,
    INCONCLUSIVE,
    HEIGHT,
};

enum class Soundness {
    EXACT,            // the verdict is a theorem about the input
    SOUND_ONE_SIDED,  // certificate in one direction; bounded search or
                      // degree truncation caveat in the other
    HEURISTIC,        // advisory only
};

const char* to_string(VerdictKind k);
const char* to_string(Soundness s);

/// Everything a verdict can carry to let a reader (or a replay run)
/// re-verify it without redoing any search.
struct Certificate {
    std::optional<ExponentVector> multiplier;  // monomial multiplier m
    std::optional<ExponentVector> escape;      // monomial escaping (m^[p], p^s)
    std::optional<ModPoly> escape_row;         // span element that escapes
    std::optional<ModPoly> c;                  // test-element multiple used
    unsigned e = 0;
    unsigned n = 0;
    unsigned index_offset = 0;    // 0: operator indices e+r-1 / e+n-2;
                                  // 1: the shifted variant (e+r / e+n-1)
    unsigned degree_bound = 0;
    unsigned search_bound = 0;
    unsigned height = 0;              // for HEIGHT verdicts
    std::string degree_stability;     // "", "STABLE" or "CHANGED"
};

struct Verdict {
    VerdictKind kind;
    Soundness soundness;
    std::string detail;  // machine-readable slug, empty when kind says it all
    Certificate cert;
};

/// Parameter bundle the command layer assembles before dispatching.
struct CriterionParams {
    ModPoly f;
    unsigned n = 1;
    unsigned e = 1;
    std::optional<ModPoly> c;
    unsigned degree_bound = 0;
    unsigned search_bound = 0;

    /// Rejects f == 0, f without a unit coefficient mod p (not a
    /// non-zero-divisor witness we accept), and precision below the
    /// stated floor.
    void validate(unsigned min_precision) const;
};

/* defaults */

/// Degree cap for the ideal recursion: (p-1)*deg(f) + k*(p-1) + 2p.
unsigned default_degree_bound(const ModPoly& f);

/// Multiplier-degree cap for witness searches: 4*k*p.
unsigned default_search_bound(const RingConfig& cfg);

/* point tests */

/// Classical F-purity of A/(f): F_PURE iff f^(p-1) has a monomial with
/// all exponents <= p-1 and unit coefficient mod p.  EXACT; throws if
/// f vanishes mod p.
Verdict fedder_fpure(const ModPoly& f);

/// First splitting condition: u^(e+r-1)(g) lies in (p^r) for every
/// 1 <= r <= n-1 (vacuous at n=1).  Requires prec(g) >= n.
bool check_D1(const ModPoly& g, unsigned e, unsigned n);

/// Outcome of the non-degeneracy condition u^(e+n-2)(g) escaping
/// (m^[p], p^n), evaluated at both operator-index conventions.
struct D3Result {
    bool holds = false;                     // index e+n-2
    std::optional<ExponentVector> witness;  // escaping monomial if holds
    bool holds_shifted = false;             // index e+n-1
    std::optional<ExponentVector> witness_shifted;
};

D3Result check_D3(const ModPoly& g, unsigned e, unsigned n);

/// Verifies a claimed decomposition g = sum of parts: checks
/// u^r(parts[r]) lies in the principal ideal (f^(p^(e+n-r-1)-1)) for
/// each r, by slice membership with a bounded multiplier degree.
/// One-sided: true certifies, false is only "not verified at the bound".
bool verify_D2_decomposition(const std::vector<ModPoly>& parts,
                             const ModPoly& f, unsigned e, unsigned n);

/* necessary conditions and height */

/// Level-n necessary condition for n-quasi-F^e-splitting: iterates the
/// span recursion from the level-1 ideal generated by
/// f^(p-1) * u^(e-1)(f^(p^(e-1)-1) x^j), one kernel-and-transport step
/// per level, and tests escape from (m^[p], p).  Escape ->
/// INCONCLUSIVE/"not_excluded" (EXACT escape certificate); containment
/// up to the degree bound -> NOT_QFE_SPLIT_UP_TO_DEGREE
/// (SOUND_ONE_SIDED).  Requires prec(f) >= n+1.
Verdict necessary_qfe(const ModPoly& f, unsigned e, unsigned n,
                      unsigned degree_bound);

/// Variant for f that is already not F-pure, seeded with f^(p-1)*m
/// (m the irrelevant ideal): containment excludes n-quasi-F^2-splitting
/// up to the degree bound.  Throws if f is F-pure.
Verdict necessary_qf2_nonFpure(const ModPoly& f, unsigned n,
                               unsigned degree_bound);

/// Smallest level n <= n_max at which the e=1 recursion escapes
/// (m^[p], p): HEIGHT verdict with cert.height = n, else
/// INCONCLUSIVE/"height_gt_nmax".  Requires prec(f) >= n_max+1.
Verdict qfs_height(const ModPoly& f, unsigned n_max, unsigned degree_bound);

/* sufficient conditions (witness searches) */

struct SearchOptions {
    unsigned search_bound = 0;  // 0 means default_search_bound(cfg)
    unsigned threads = 1;
    std::optional<ExponentVector> witness;  // replay: test only this m
};

/// Searches monomial multipliers m (graded-lex, total degree up to the
/// search bound) for g = m*f^(p^(e+n-1)-1) passing the splitting
/// conditions; QFE_SPLIT_CERTIFIED with the first witness, else
/// INCONCLUSIVE.  The shifted index convention is admitted for n >= 2
/// and recorded in cert.index_offset.  Requires prec(f) >= n.
Verdict sufficient_qfe(const ModPoly& f, unsigned e, unsigned n,
                       const SearchOptions& opt);

/// Same search on c^(p^n-1) * m * f^(p^(e+n-1)-1) over e in
/// [e_lo, e_hi]; first success certifies n-quasi-F-regularity given
/// that c is a valid test-element multiple (asserted by the caller).
Verdict sufficient_qfr(const ModPoly& f, unsigned n, const ModPoly& c,
                       unsigned e_lo, unsigned e_hi,
                       const SearchOptions& opt);

/* test-element discovery */

/// Formal partials of f mod p plus their pairwise products: starting
/// seeds for the closure below.
std::vector<ModPoly> jacobian_seed(const ModPoly& f);

/// One transport step a -> u(a * f^(p-1)) mod p.
ModPoly cartier_step(const ModPoly& a, const ModPoly& f);

/// Deterministic ordering of polynomials: graded-lex on the leading
/// monomial, then term count, then termwise comparison.
struct PolyLess {
    bool operator()(const ModPoly& a, const ModPoly& b) const;
};

struct TauClosure {
    std::vector<ModPoly> elements;  // nonzero, graded-lex smallest first
    bool complete = false;          // closure stabilized under the moves
    unsigned steps = 0;
};

/// Closure of the seeds under cartier_step composed with multiplication
/// by monomials of degree <= p*k; elements are certified members of the
/// test ideal of A/(f) mod p.
TauClosure tau_closure(const std::vector<ModPoly>& seeds, const ModPoly& f,
                       unsigned max_steps);

namespace detail {

/// Outcome of the span recursion, exposed for property tests.
struct IterationResult {
    bool escaped = false;
    unsigned level = 0;                    // level at which escape happened
    std::optional<ModPoly> escape_row;     // row escaping (m^[p], p)
    SpanBasis final_span;                  // span at the last level run
};

enum class SeedKind { POWER, POWER_TIMES_M };

/// Runs the recursion to the given level at the given degree bound.
/// negate_delta flips the sign of the transported generator; verdicts
/// must be invariant under it.
IterationResult necessary_iteration(const ModPoly& f, unsigned e,
                                    unsigned level, unsigned degree_bound,
                                    SeedKind seed, bool negate_delta);

}  // namespace detail

}  // namespace qfs

#endif  // QFSPLIT_CRITERIA_HPP
