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

#include "qfsplit/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace qfs {

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::F_PURE: return "F_PURE";
        case VerdictKind::NOT_F_PURE: return "NOT_F_PURE";
        case VerdictKind::QFE_SPLIT_CERTIFIED: return "QFE_SPLIT_CERTIFIED";
        case VerdictKind::NOT_QFE_SPLIT_UP_TO_DEGREE:
            return "NOT_QFE_SPLIT_UP_TO_DEGREE";
        case VerdictKind::QFR_CERTIFIED: return "QFR_CERTIFIED";
        case VerdictKind::INCONCLUSIVE: return "INCONCLUSIVE";
        case VerdictKind::HEIGHT: return "HEIGHT";
    }
    return "?";
}

const char* to_string(Soundness s) {
    switch (s) {
        case Soundness::EXACT: return "EXACT";
        case Soundness::SOUND_ONE_SIDED: return "SOUND_ONE_SIDED";
        case Soundness::HEURISTIC: return "HEURISTIC";
    }
    return "?";
}

namespace {

std::uint64_t upow_checked(std::uint64_t p, unsigned e, std::uint64_t cap,
                           const char* what) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / p)
            throw error(std::string(what) + ": p^" + std::to_string(e) +
                        " exceeds the supported range");
        r *= p;
    }
    return r;
}

ExponentVector unit_exponent(std::size_t k, std::size_t i) {
    std::vector<std::uint32_t> v(k, 0);
    v[i] = 1;
    return ExponentVector(std::move(v));
}

}  // namespace

void CriterionParams::validate(unsigned min_precision) const {
    if (f.is_zero()) throw error("f must be nonzero");
    const std::uint64_t p = f.cfg().p;
    bool unit = false;
    for (const auto& [ev, c] : f.terms()) {
        if (c % p != 0) {
            unit = true;
            break;
        }
    }
    if (!unit)
        throw error(
            "f must have a coefficient that is a unit mod p; inputs "
            "divisible by p are not accepted as non-zero-divisors");
    if (f.prec() < min_precision)
        throw precision_error("this command needs working precision >= " +
                              std::to_string(min_precision) + ", f carries " +
                              std::to_string(f.prec()));
    if (n < 1) throw error("level n must be >= 1");
    if (e < 1) throw error("Frobenius exponent e must be >= 1");
}

unsigned default_degree_bound(const ModPoly& f) {
    const RingConfig& cfg = f.cfg();
    const auto p = static_cast<unsigned>(cfg.p);
    const auto k = static_cast<unsigned>(cfg.vars.size());
    const auto d = static_cast<unsigned>(f.total_degree());
    return (p - 1) * d + k * (p - 1) + 2 * p;
}

unsigned default_search_bound(const RingConfig& cfg) {
    return 4 * static_cast<unsigned>(cfg.vars.size()) *
           static_cast<unsigned>(cfg.p);
}

/* point tests */

Verdict fedder_fpure(const ModPoly& f) {
    const auto p = f.cfg().p;
    ModPoly fp = f.reduce_precision(1);
    if (fp.is_zero())
        throw error("f vanishes mod p; the F-purity test needs a nonzero "
                    "reduction");
    ModPoly g = fp.pow(p - 1);
    Verdict v;
    v.cert.e = 1;
    v.cert.n = 1;
    v.soundness = Soundness::EXACT;
    if (auto w = g.escape_witness(1)) {
        v.kind = VerdictKind::F_PURE;
        v.cert.escape = std::move(*w);
    } else {
        v.kind = VerdictKind::NOT_F_PURE;
    }
    return v;
}

bool check_D1(const ModPoly& g, unsigned e, unsigned n) {
    if (g.prec() < n)
        throw precision_error("condition check at level " + std::to_string(n) +
                              " needs precision >= n");
    ModPoly h = g;
    unsigned applied = 0;
    for (unsigned r = 1; r + 1 <= n; ++r) {
        const unsigned target = e + r - 1;
        while (applied < target) {
            h = u_op(h);
            ++applied;
        }
        if (!h.in_pr_ideal(r)) return false;
    }
    return true;
}

D3Result check_D3(const ModPoly& g, unsigned e, unsigned n) {
    if (g.prec() < n)
        throw precision_error("condition check at level " + std::to_string(n) +
                              " needs precision >= n");
    D3Result res;
    ModPoly h = u_iter(g, e + n - 2);
    if (auto w = h.escape_witness(n)) {
        res.holds = true;
        res.witness = std::move(*w);
    }
    ModPoly h2 = u_op(h);
    if (auto w = h2.escape_witness(n)) {
        res.holds_shifted = true;
        res.witness_shifted = std::move(*w);
    }
    return res;
}

bool verify_D2_decomposition(const std::vector<ModPoly>& parts,
                             const ModPoly& f, unsigned e, unsigned n) {
    if (parts.size() != n)
        throw error("decomposition must have exactly n parts");
    const auto p = f.cfg().p;
    for (unsigned r = 0; r < n; ++r) {
        if (parts[r].is_zero()) continue;
        unsigned common = std::min(f.prec(), parts[r].prec());
        ModPoly h = u_iter(parts[r].reduce_precision(common), r);
        if (h.is_zero()) continue;
        const std::uint64_t m =
            upow_checked(p, e + n - r - 1, std::uint64_t(1) << 32,
                         "decomposition exponent") -
            1;
        ModPoly target = f.reduce_precision(common).pow(m);
        // Multiplier degree is capped just above deg(h) - deg(target);
        // a miss at the cap is "not verified", never "disproved".
        const auto bound =
            static_cast<std::uint32_t>(h.total_degree()) +
            2 * static_cast<std::uint32_t>(p);
        SpanBasis slice = ideal_slice({target}, bound);
        if (!member(slice, h)) return false;
    }
    return true;
}

/* necessary conditions: the span recursion */

namespace {

/// Generators of the level-1 ideal for exponent e: all nonzero values
/// f^(p-1) * u^(e-1)(f^(p^(e-1)-1) * x^j), j ranging over [0, p^(e-1))^k.
/// Each term of f^(p^(e-1)-1) feeds exactly one j, so one pass over the
/// terms assembles every generator.
std::vector<ModPoly> level1_generators(const ModPoly& f, unsigned e) {
    const RingPtr& cfg = f.ring();
    const std::uint64_t p = cfg->p;
    ModPoly fp1 = f.pow(p - 1);
    if (e == 1) return {fp1};

    const std::uint64_t P = upow_checked(p, e - 1, std::uint64_t(1) << 20,
                                         "level-1 seeding");
    ModPoly big = f.pow(P - 1);
    const std::size_t k = cfg->vars.size();
    std::map<ExponentVector, ModPoly, GradedLexLess> buckets;
    for (const auto& [E, c] : big.terms()) {
        std::vector<std::uint32_t> j(k), q(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::uint64_t rem = E.e[i] % P;
            j[i] = static_cast<std::uint32_t>(P - 1 - rem);
            q[i] = static_cast<std::uint32_t>(E.e[i] / P);
        }
        ExponentVector jv(std::move(j));
        auto it =
            buckets.try_emplace(std::move(jv), ModPoly(cfg, big.prec())).first;
        ExponentVector qv(std::move(q));
        it->second.set_coeff(
            qv, add_mod(it->second.coeff(qv), c, it->second.modulus()));
    }
    std::vector<ModPoly> gens;
    gens.reserve(buckets.size());
    for (auto& [j, b] : buckets) {
        if (b.is_zero()) continue;
        gens.push_back(fp1 * b);
    }
    if (gens.empty()) gens.push_back(fp1);
    return gens;
}

detail::IterationResult run_levels(const ModPoly& f, unsigned e,
                                   unsigned max_level, unsigned degree_bound,
                                   detail::SeedKind seed, bool negate_delta,
                                   bool early_stop) {
    const RingPtr& cfg = f.ring();
    const std::uint64_t p = cfg->p;
    if (f.is_zero()) throw error("f must be nonzero");
    if (f.prec() < 2)
        throw precision_error("the ideal recursion needs precision >= 2");
    const unsigned B = f.prec() - 1;  // one digit is spent on the derivation
    if (max_level >= 2 && B < 2)
        throw precision_error(
            "iterating past level 1 needs precision >= 3 on f");

    ModPoly fp1 = f.pow(p - 1);
    if (degree_bound < fp1.total_degree())
        throw error("degree bound " + std::to_string(degree_bound) +
                    " is below deg(f^(p-1)) = " +
                    std::to_string(fp1.total_degree()));
    ModPoly transport = delta1(fp1);  // precision B
    if (negate_delta) transport = -transport;
    ModPoly fp1B = fp1.reduce_precision(B);

    std::vector<ModPoly> gens;
    if (seed == detail::SeedKind::POWER) {
        for (auto& g : level1_generators(f, e))
            gens.push_back(g.reduce_precision(B));
    } else {
        const std::size_t k = cfg->vars.size();
        for (std::size_t i = 0; i < k; ++i)
            gens.push_back(fp1B.shifted(unit_exponent(k, i)));
    }

    detail::IterationResult res;
    SpanBasis span = ideal_slice(gens, degree_bound);
    res.level = 1;
    for (unsigned level = 1;; ++level) {
        if (early_stop || level == max_level) {
            if (auto row = escapes_mp_p(span)) {
                res.escaped = true;
                res.level = level;
                res.escape_row = std::move(*row);
                res.final_span = std::move(span);
                return res;
            }
        }
        if (level == max_level) break;
        SpanBasis ker = kernel_under_u_mod_p(span);
        std::vector<ModPoly> next;
        next.reserve(ker.rows.size() + 1);
        for (const auto& row : ker.rows) {
            ModPoly t = u_op(transport * row);
            if (!t.is_zero()) next.push_back(std::move(t));
        }
        next.push_back(fp1B);
        span = ideal_slice(next, degree_bound);
        res.level = level + 1;
    }
    res.final_span = std::move(span);
    return res;
}

/// Reruns the recursion with the degree bound pushed up by p and
/// compares the canonical mod-(m^[p], p) projections of the final spans.
std::string stability_tag(const ModPoly& f, unsigned e, unsigned max_level,
                          unsigned degree_bound, detail::SeedKind seed,
                          const detail::IterationResult& base) {
    const auto p = static_cast<unsigned>(f.cfg().p);
    auto alt = run_levels(f, e, max_level, degree_bound + p, seed, false,
                          /*early_stop=*/false);
    return projected_span_mod_p(base.final_span) ==
                   projected_span_mod_p(alt.final_span)
               ? "STABLE"
               : "CHANGED";
}

}  // namespace

namespace detail {

IterationResult necessary_iteration(const ModPoly& f, unsigned e,
                                    unsigned level, unsigned degree_bound,
                                    SeedKind seed, bool negate_delta) {
    return run_levels(f, e, level, degree_bound, seed, negate_delta,
                      /*early_stop=*/false);
}

}  // namespace detail

Verdict necessary_qfe(const ModPoly& f, unsigned e, unsigned n,
                      unsigned degree_bound) {
    if (f.prec() < n + 1)
        throw precision_error("level-" + std::to_string(n) +
                              " necessary condition needs precision >= n+1");
    auto res = run_levels(f, e, n, degree_bound, detail::SeedKind::POWER,
                          false, false);
    Verdict v;
    v.cert.e = e;
    v.cert.n = n;
    v.cert.degree_bound = degree_bound;
    v.cert.degree_stability = stability_tag(f, e, n, degree_bound,
                                            detail::SeedKind::POWER, res);
    if (res.escaped) {
        // The slice escapes (m^[p], p), so the full ideal does: the
        // necessary condition holds and nothing excludes splitness.
        v.kind = VerdictKind::INCONCLUSIVE;
        v.detail = "not_excluded";
        v.soundness = Soundness::EXACT;
        v.cert.escape = res.escape_row->escape_witness(1);
        v.cert.escape_row = std::move(res.escape_row);
    } else {
        v.kind = VerdictKind::NOT_QFE_SPLIT_UP_TO_DEGREE;
        v.detail = "contained_up_to_degree";
        v.soundness = Soundness::SOUND_ONE_SIDED;
    }
    return v;
}

Verdict necessary_qf2_nonFpure(const ModPoly& f, unsigned n,
                               unsigned degree_bound) {
    if (fedder_fpure(f).kind != VerdictKind::NOT_F_PURE)
        throw error("this criterion applies only to f that is not F-pure");
    if (f.prec() < n + 1)
        throw precision_error("level-" + std::to_string(n) +
                              " necessary condition needs precision >= n+1");
    auto res = run_levels(f, 2, n, degree_bound,
                          detail::SeedKind::POWER_TIMES_M, false, false);
    Verdict v;
    v.cert.e = 2;
    v.cert.n = n;
    v.cert.degree_bound = degree_bound;
    v.cert.degree_stability = stability_tag(
        f, 2, n, degree_bound, detail::SeedKind::POWER_TIMES_M, res);
    if (res.escaped) {
        v.kind = VerdictKind::INCONCLUSIVE;
        v.detail = "escaped_no_conclusion";
        v.soundness = Soundness::SOUND_ONE_SIDED;
        v.cert.escape = res.escape_row->escape_witness(1);
        v.cert.escape_row = std::move(res.escape_row);
    } else {
        v.kind = VerdictKind::NOT_QFE_SPLIT_UP_TO_DEGREE;
        v.detail = "contained_up_to_degree";
        v.soundness = Soundness::SOUND_ONE_SIDED;
    }
    return v;
}

Verdict qfs_height(const ModPoly& f, unsigned n_max, unsigned degree_bound) {
    if (f.prec() < n_max + 1)
        throw precision_error("height search to level " +
                              std::to_string(n_max) +
                              " needs precision >= n_max+1");
    auto res = run_levels(f, 1, n_max, degree_bound, detail::SeedKind::POWER,
                          false, /*early_stop=*/true);
    Verdict v;
    v.cert.e = 1;
    v.cert.n = n_max;
    v.cert.degree_bound = degree_bound;
    if (res.escaped) {
        v.kind = VerdictKind::HEIGHT;
        v.soundness = Soundness::SOUND_ONE_SIDED;
        v.cert.height = res.level;
        v.cert.escape = res.escape_row->escape_witness(1);
        v.cert.escape_row = std::move(res.escape_row);
    } else {
        v.kind = VerdictKind::INCONCLUSIVE;
        v.detail = "height_gt_nmax";
        v.soundness = Soundness::SOUND_ONE_SIDED;
    }
    return v;
}

/* sufficient conditions: witness search */

namespace {

struct SearchHit {
    ExponentVector multiplier;
    ExponentVector escape;
    unsigned index_offset = 0;
};

/// Tests one monomial multiplier against the splitting conditions at
/// both index conventions (the shifted one only for n >= 2; at n = 1 it
/// would certify inputs the exact F-purity test rejects).
std::optional<SearchHit> test_multiplier(const ModPoly& base,
                                         const ExponentVector& m, unsigned e,
                                         unsigned n) {
    ModPoly g = base.shifted(m);
    D3Result d3 = check_D3(g, e, n);
    if (d3.holds && check_D1(g, e, n))
        return SearchHit{m, std::move(*d3.witness), 0};
    if (n >= 2 && d3.holds_shifted && check_D1(g, e + 1, n))
        return SearchHit{m, std::move(*d3.witness_shifted), 1};
    return std::nullopt;
}

/// Graded-lex-first hit over the candidate list; parallel runs prune on
/// the best index so the returned hit is identical to the serial one.
std::optional<SearchHit> search_multipliers(
    const ModPoly& base, const std::vector<ExponentVector>& cands, unsigned e,
    unsigned n, unsigned threads) {
    if (cands.empty()) return std::nullopt;
    if (threads <= 1 || cands.size() < 32) {
        for (const auto& m : cands) {
            if (auto hit = test_multiplier(base, m, e, n)) return hit;
        }
        return std::nullopt;
    }
    std::atomic<std::size_t> best{cands.size()};
    const unsigned T = threads;
    std::vector<std::thread> pool;
    pool.reserve(T);
    for (unsigned tid = 0; tid < T; ++tid) {
        pool.emplace_back([&, tid] {
            for (std::size_t i = tid; i < cands.size(); i += T) {
                if (i >= best.load(std::memory_order_relaxed)) continue;
                if (test_multiplier(base, cands[i], e, n)) {
                    std::size_t cur = best.load();
                    while (i < cur &&
                           !best.compare_exchange_weak(cur, i)) {
                    }
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    const std::size_t idx = best.load();
    if (idx >= cands.size()) return std::nullopt;
    return test_multiplier(base, cands[idx], e, n);
}

std::vector<ExponentVector> candidate_list(const RingConfig& cfg,
                                           const SearchOptions& opt) {
    if (opt.witness) return {*opt.witness};
    const unsigned sb =
        opt.search_bound ? opt.search_bound : default_search_bound(cfg);
    return monomials_up_to(cfg.vars.size(), sb);
}

}  // namespace

Verdict sufficient_qfe(const ModPoly& f, unsigned e, unsigned n,
                       const SearchOptions& opt) {
    if (f.is_zero()) throw error("f must be nonzero");
    if (f.prec() < n)
        throw precision_error("certifying at level " + std::to_string(n) +
                              " needs precision >= n");
    const std::uint64_t p = f.cfg().p;
    const std::uint64_t m =
        upow_checked(p, e + n - 1, std::uint64_t(1) << 32,
                     "witness exponent") -
        1;
    ModPoly base = f.pow(m);
    auto cands = candidate_list(f.cfg(), opt);
    auto hit = search_multipliers(base, cands, e, n, opt.threads);
    Verdict v;
    v.cert.e = e;
    v.cert.n = n;
    v.cert.search_bound =
        opt.search_bound ? opt.search_bound : default_search_bound(f.cfg());
    if (hit) {
        v.kind = VerdictKind::QFE_SPLIT_CERTIFIED;
        v.soundness = Soundness::EXACT;
        v.cert.multiplier = std::move(hit->multiplier);
        v.cert.escape = std::move(hit->escape);
        v.cert.index_offset = hit->index_offset;
    } else {
        v.kind = VerdictKind::INCONCLUSIVE;
        v.detail = opt.witness ? "witness_failed_checks"
                               : "no_witness_up_to_search_bound";
        v.soundness = Soundness::SOUND_ONE_SIDED;
    }
    return v;
}

Verdict sufficient_qfr(const ModPoly& f, unsigned n, const ModPoly& c,
                       unsigned e_lo, unsigned e_hi,
                       const SearchOptions& opt) {
    if (f.is_zero()) throw error("f must be nonzero");
    if (c.is_zero() || c.reduce_precision(1).is_zero())
        throw error("the test-element multiple c must be nonzero mod p");
    if (e_lo < 1 || e_hi < e_lo) throw error("empty or invalid e range");
    if (f.prec() < n || c.prec() < n)
        throw precision_error("certifying at level " + std::to_string(n) +
                              " needs precision >= n on f and c");
    const std::uint64_t p = f.cfg().p;
    ModPoly cpow = c.pow(upow_checked(p, n, std::uint64_t(1) << 32,
                                      "twist exponent") -
                         1);
    auto cands = candidate_list(f.cfg(), opt);
    Verdict v;
    v.cert.n = n;
    v.cert.c = c;
    v.cert.search_bound =
        opt.search_bound ? opt.search_bound : default_search_bound(f.cfg());
    for (unsigned e = e_lo; e <= e_hi; ++e) {
        const std::uint64_t m =
            upow_checked(p, e + n - 1, std::uint64_t(1) << 32,
                         "witness exponent") -
            1;
        ModPoly base = cpow * f.pow(m);
        if (auto hit = search_multipliers(base, cands, e, n, opt.threads)) {
            v.kind = VerdictKind::QFR_CERTIFIED;
            v.soundness = Soundness::EXACT;
            v.detail = "assumes_c_valid";
            v.cert.e = e;
            v.cert.multiplier = std::move(hit->multiplier);
            v.cert.escape = std::move(hit->escape);
            v.cert.index_offset = hit->index_offset;
            return v;
        }
    }
    v.kind = VerdictKind::INCONCLUSIVE;
    v.detail = opt.witness ? "witness_failed_in_e_range"
                           : "no_witness_in_e_range";
    v.soundness = Soundness::SOUND_ONE_SIDED;
    v.cert.e = e_hi;
    return v;
}

/* test-element discovery */

bool PolyLess::operator()(const ModPoly& a, const ModPoly& b) const {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
    GradedLexLess gl;
    const auto& la = a.terms().rbegin()->first;
    const auto& lb = b.terms().rbegin()->first;
    if (gl(la, lb)) return true;
    if (gl(lb, la)) return false;
    if (a.num_terms() != b.num_terms()) return a.num_terms() < b.num_terms();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (gl(ia->first, ib->first)) return true;
        if (gl(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return false;
}

std::vector<ModPoly> jacobian_seed(const ModPoly& f) {
    const RingPtr& cfg = f.ring();
    const std::uint64_t p = cfg->p;
    const std::size_t k = cfg->vars.size();
    ModPoly fp = f.reduce_precision(1);
    std::vector<ModPoly> partials;
    for (std::size_t i = 0; i < k; ++i) {
        ModPoly d(cfg, 1);
        for (const auto& [E, c] : fp.terms()) {
            if (E.e[i] == 0) continue;
            ExponentVector dE = E;
            dE.e[i] -= 1;
            d.set_coeff(dE, mul_mod(c, E.e[i] % p, p));
        }
        if (!d.is_zero()) partials.push_back(std::move(d));
    }
    std::set<ModPoly, PolyLess> out(partials.begin(), partials.end());
    for (std::size_t i = 0; i < partials.size(); ++i)
        for (std::size_t j = i; j < partials.size(); ++j)
            out.insert(partials[i] * partials[j]);
    return {out.begin(), out.end()};
}

ModPoly cartier_step(const ModPoly& a, const ModPoly& f) {
    const std::uint64_t p = f.cfg().p;
    return u_op(a.reduce_precision(1) * f.reduce_precision(1).pow(p - 1));
}

TauClosure tau_closure(const std::vector<ModPoly>& seeds, const ModPoly& f,
                       unsigned max_steps) {
    if (seeds.empty()) throw error("tau closure needs at least one seed");
    const RingPtr& cfg = f.ring();
    const std::uint64_t p = cfg->p;
    const std::size_t k = cfg->vars.size();
    constexpr std::size_t kMaxElements = 4096;

    ModPoly fp1 = f.reduce_precision(1).pow(p - 1);
    std::set<ModPoly, PolyLess> known;
    std::vector<ModPoly> frontier;
    for (const auto& s : seeds) {
        ModPoly s1 = s.reduce_precision(1);
        if (!s1.is_zero() && known.insert(s1).second)
            frontier.push_back(std::move(s1));
    }
    auto mons = monomials_up_to(
        k, static_cast<std::uint32_t>(p) * static_cast<std::uint32_t>(k));

    TauClosure out;
    bool capped = false;
    while (!frontier.empty() && out.steps < max_steps && !capped) {
        ++out.steps;
        std::vector<ModPoly> next;
        for (const auto& s : frontier) {
            ModPoly sf = s * fp1;
            for (const auto& m : mons) {
                ModPoly t = u_op(sf.shifted(m));
                if (t.is_zero() || !known.insert(t).second) continue;
                next.push_back(std::move(t));
                if (known.size() > kMaxElements) {
                    capped = true;
                    break;
                }
            }
            if (capped) break;
        }
        frontier = std::move(next);
    }
    out.elements.assign(known.begin(), known.end());
    out.complete = frontier.empty() && !capped;
    return out;
}

}  // namespace qfs
