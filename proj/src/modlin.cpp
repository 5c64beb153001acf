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

#include "qfsplit/modlin.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "qfsplit/semilinear.hpp"

namespace qfs {

namespace {

const ExponentVector& pivot_of(const ModPoly& row) {
    return row.terms().begin()->first;
}

std::uint64_t pivot_coeff(const ModPoly& row) {
    return row.terms().begin()->second;
}

/// Scale row by the inverse of the unit part of its leading coefficient,
/// so the leading coefficient becomes exactly p^j.
ModPoly normalize_row(const ModPoly& row, std::uint64_t p, std::uint64_t pm) {
    std::uint64_t c = pivot_coeff(row);
    unsigned j = val_p(c, p);
    std::uint64_t unit = c;
    for (unsigned i = 0; i < j; ++i) unit /= p;
    if (unit == 1) return row;
    return row.scale(inv_unit_mod(unit, pm));
}

/// Minimal dense F_p row-reduction helper for the kernel solver.
struct FpMatrix {
    std::uint64_t p;
    std::size_t ncols;
    std::vector<std::vector<std::uint64_t>> rows;

    /// Reduced row echelon form; returns the pivot column of each row.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
            std::size_t sel = r;
            while (sel < rows.size() && rows[sel][c] % p == 0) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[r], rows[sel]);
            std::uint64_t inv = inv_unit_mod(rows[r][c] % p, p);
            for (auto& x : rows[r]) x = mul_mod(x, inv, p);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == r) continue;
                std::uint64_t f = rows[i][c] % p;
                if (!f) continue;
                for (std::size_t c2 = 0; c2 < ncols; ++c2)
                    rows[i][c2] = sub_mod(rows[i][c2] % p,
                                          mul_mod(f, rows[r][c2] % p, p), p);
            }
            pivots.push_back(c);
            ++r;
        }
        rows.resize(pivots.size());
        return pivots;
    }

    /// Basis of the right kernel {x : A x = 0 over F_p}.
    std::vector<std::vector<std::uint64_t>> kernel_basis() {
        std::vector<std::size_t> pivots = rref();
        std::vector<bool> is_pivot(ncols, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<std::uint64_t>> out;
        for (std::size_t f = 0; f < ncols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<std::uint64_t> v(ncols, 0);
            v[f] = 1;
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = sub_mod(0, rows[i][f] % p, p);
            out.push_back(std::move(v));
        }
        return out;
    }
};

void check_degree(const ModPoly& row, std::uint32_t D) {
    if (row.total_degree() > D)
        throw error("row of degree " + std::to_string(row.total_degree()) +
                    " exceeds the slice bound " + std::to_string(D));
}

}  // namespace

SpanBasis howell_reduce(RingPtr cfg, std::vector<ModPoly> in_rows,
                        std::uint32_t D, SpanProvenance provenance) {
    if (!cfg) throw error("null ring configuration");
    unsigned prec = cfg->W;
    for (const ModPoly& r : in_rows) {
        if (!r.ring()->same_ring(*cfg))
            throw error("rows live in different rings");
        check_degree(r, D);
        prec = std::min(prec, r.prec());
    }
    const std::uint64_t p = cfg->p;
    const std::uint64_t pm = cfg->pow_p(prec);

    // phase 1: echelon with annihilator completion.  Stored rows are
    // normalized (leading coefficient p^j) and never change afterwards;
    // each incoming row is reduced against the stored pivot at its
    // leading monomial or swapped in when it has the smaller valuation.
    std::map<ExponentVector, std::size_t, GradedLexLess> slot;
    std::vector<ModPoly> stored;
    std::deque<ModPoly> work(in_rows.begin(), in_rows.end());
    while (!work.empty()) {
        ModPoly row = std::move(work.front()).reduce_precision(prec);
        work.pop_front();
        while (!row.is_zero()) {
            row = normalize_row(row, p, pm);
            unsigned j = val_p(pivot_coeff(row), p);
            auto it = slot.find(pivot_of(row));
            if (it == slot.end()) {
                slot.emplace(pivot_of(row), stored.size());
                stored.push_back(row);
                if (j > 0) {
                    ModPoly ann = row.scale(cfg->pow_p(prec - j));
                    if (!ann.is_zero()) work.push_back(std::move(ann));
                }
                break;
            }
            ModPoly& s = stored[it->second];
            unsigned js = val_p(pivot_coeff(s), p);
            if (j >= js) {
                row = row - s.scale(cfg->pow_p(j - js));
            } else {
                // smaller valuation wins the slot; re-process the loser
                std::swap(s, row);
                if (j > 0) {
                    ModPoly ann = s.scale(cfg->pow_p(prec - j));
                    if (!ann.is_zero()) work.push_back(std::move(ann));
                }
            }
        }
    }

    // phase 2: sort by pivot and reduce entries of earlier rows at later
    // pivot monomials below the pivot power, yielding the canonical form.
    std::vector<std::size_t> order;
    for (const auto& [ev, idx] : slot) order.push_back(idx);
    std::vector<ModPoly> rows;
    rows.reserve(order.size());
    for (std::size_t idx : order) rows.push_back(std::move(stored[idx]));
    for (std::size_t a = 0; a + 1 < rows.size(); ++a) {
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            std::uint64_t c = rows[a].coeff(pivot_of(rows[b]));
            if (c == 0) continue;
            std::uint64_t pj = pivot_coeff(rows[b]);
            std::uint64_t q = c / pj;
            if (q) rows[a] = rows[a] - rows[b].scale(q);
        }
    }

    SpanBasis out;
    out.cfg = std::move(cfg);
    out.prec = prec;
    out.degree_bound = D;
    out.provenance = provenance;
    out.rows = std::move(rows);
    return out;
}

SpanBasis howell_reduce(std::vector<ModPoly> rows, std::uint32_t D,
                        SpanProvenance provenance) {
    if (rows.empty())
        throw error("howell_reduce needs a ring: supply it or a nonempty row list");
    RingPtr cfg = rows.front().ring();
    return howell_reduce(std::move(cfg), std::move(rows), D, provenance);
}

SpanBasis ideal_slice(const std::vector<ModPoly>& gens, std::uint32_t D) {
    if (gens.empty()) throw error("ideal_slice needs at least one generator");
    RingPtr cfg = gens.front().ring();
    std::vector<ModPoly> rows;
    for (const ModPoly& g : gens) {
        if (g.is_zero()) continue;
        std::uint64_t dg = g.total_degree();
        if (dg > D) continue;  // no multiple fits the slice
        for (const ExponentVector& a :
             monomials_up_to(cfg->nvars(), static_cast<std::uint32_t>(D - dg)))
            rows.push_back(g.shifted(a));
    }
    return howell_reduce(std::move(cfg), std::move(rows), D,
                         SpanProvenance::IDEAL_SLICE);
}

bool member(const SpanBasis& b, const ModPoly& g) {
    if (g.total_degree() > b.degree_bound)
        throw error("membership query of degree " +
                    std::to_string(g.total_degree()) +
                    " exceeds the basis bound " +
                    std::to_string(b.degree_bound));
    ModPoly rem = g.reduce_precision(b.prec);
    std::map<ExponentVector, std::size_t, GradedLexLess> slot;
    for (std::size_t i = 0; i < b.rows.size(); ++i)
        slot.emplace(pivot_of(b.rows[i]), i);
    const std::uint64_t p = b.cfg->p;
    while (!rem.is_zero()) {
        auto it = slot.find(pivot_of(rem));
        if (it == slot.end()) return false;
        const ModPoly& row = b.rows[it->second];
        std::uint64_t pj = pivot_coeff(row);
        std::uint64_t c = pivot_coeff(rem);
        if (val_p(c, p) < val_p(pj, p)) return false;
        rem = rem - row.scale(c / pj);
    }
    return true;
}

SpanBasis kernel_under_u_mod_p(const SpanBasis& b) {
    if (b.prec < 2)
        throw precision_error(
            "kernel_under_u_mod_p needs precision >= 2 so that divisibility "
            "by p is a nontrivial condition; have " + std::to_string(b.prec));
    const std::uint64_t p = b.cfg->p;
    const std::size_t m = b.rows.size();

    // constraint matrix over F_p: one row per monomial in the union
    // support of the u-images, one column per basis row
    std::vector<ModPoly> images;
    images.reserve(m);
    std::map<ExponentVector, std::size_t, GradedLexLess> mono_index;
    for (const ModPoly& r : b.rows) {
        images.push_back(u_op(r));
        for (const auto& [ev, c] : images.back().terms())
            if (c % p != 0) mono_index.emplace(ev, mono_index.size());
    }
    FpMatrix mat;
    mat.p = p;
    mat.ncols = m;
    mat.rows.assign(mono_index.size(), std::vector<std::uint64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [ev, c] : images[i].terms()) {
            auto it = mono_index.find(ev);
            if (it != mono_index.end()) mat.rows[it->second][i] = c % p;
        }

    std::vector<ModPoly> out_rows;
    for (const auto& v : mat.kernel_basis()) {
        ModPoly combo(b.cfg, b.prec);
        for (std::size_t i = 0; i < m; ++i)
            if (v[i]) combo = combo + b.rows[i].scale(v[i]);
        if (!combo.is_zero()) out_rows.push_back(std::move(combo));
    }
    for (const ModPoly& r : b.rows) {
        ModPoly pr = r.scale(p);
        if (!pr.is_zero()) out_rows.push_back(std::move(pr));
    }
    return howell_reduce(b.cfg, std::move(out_rows), b.degree_bound,
                         SpanProvenance::MODULE_SLICE);
}

std::optional<ModPoly> escapes_mp_p(const SpanBasis& b) {
    for (const ModPoly& r : b.rows)
        if (!r.in_mp_plus_ps(1)) return r;
    return std::nullopt;
}

std::vector<ModPoly> projected_span_mod_p(const SpanBasis& b) {
    const std::uint64_t p = b.cfg->p;
    const std::uint32_t top = static_cast<std::uint32_t>(p - 1);

    // project each row: mod p, drop monomials with any exponent >= p
    std::vector<ModPoly> proj;
    std::map<ExponentVector, std::size_t, GradedLexLess> mono_index;
    for (const ModPoly& r : b.rows) {
        ModPoly q(b.cfg, 1);
        for (const auto& [ev, c] : r.terms())
            if (ev.all_le(top) && c % p != 0) q.set_coeff(ev, c % p);
        if (!q.is_zero()) {
            proj.push_back(q);
            for (const auto& [ev, c] : q.terms()) mono_index.emplace(ev, 0);
        }
    }
    std::size_t n = 0;
    for (auto& [ev, idx] : mono_index) idx = n++;

    FpMatrix mat;
    mat.p = p;
    mat.ncols = n;
    for (const ModPoly& q : proj) {
        std::vector<std::uint64_t> row(n, 0);
        for (const auto& [ev, c] : q.terms()) row[mono_index.at(ev)] = c % p;
        mat.rows.push_back(std::move(row));
    }
    mat.rref();

    std::vector<ExponentVector> monos(n);
    for (const auto& [ev, idx] : mono_index) monos[idx] = ev;
    std::vector<ModPoly> out;
    for (const auto& row : mat.rows) {
        ModPoly q(b.cfg, 1);
        for (std::size_t i = 0; i < n; ++i)
            if (row[i] % p) q.set_coeff(monos[i], row[i] % p);
        if (!q.is_zero()) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace qfs
