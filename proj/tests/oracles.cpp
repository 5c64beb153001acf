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

#include "oracles.hpp"

#include <algorithm>
#include <cassert>

namespace oracle {

namespace {

void put(Poly& r, Mono e, std::uint64_t c, std::uint64_t mod) {
    c %= mod;
    auto it = r.find(e);
    if (it == r.end()) {
        if (c) r.emplace(std::move(e), c);
        return;
    }
    it->second = (it->second + c) % mod;
    if (it->second == 0) r.erase(it);
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
    // Fermat inverse; p is prime and a is a unit.
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        e >>= 1;
        b = b * b % p;
    }
    return r;
}

}  // namespace

Poly add(const Poly& a, const Poly& b, std::uint64_t mod) {
    Poly r = a;
    for (const auto& [e, c] : b) put(r, e, c, mod);
    return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t mod) {
    Poly r = a;
    for (const auto& [e, c] : b) put(r, e, mod - (c % mod), mod);
    return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t mod) {
    Poly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Mono e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            put(r, std::move(e),
                static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(ca) * cb) % mod),
                mod);
        }
    }
    return r;
}

Poly pw(const Poly& a, std::uint64_t m, std::uint64_t mod, std::size_t k) {
    Poly r{{Mono(k, 0), 1 % mod}};
    for (std::uint64_t i = 0; i < m; ++i) r = mul(r, a, mod);
    return r;
}

Poly shift(const Poly& a, const Mono& e0, std::uint64_t mod) {
    Poly r;
    for (const auto& [e, c] : a) {
        Mono m(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i] + e0[i];
        put(r, std::move(m), c, mod);
    }
    return r;
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t mod) {
    Poly r;
    for (const auto& [e, co] : a)
        put(r, e,
            static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(co) * c) % mod),
            mod);
    return r;
}

Poly u_op(const Poly& a, std::uint64_t p) {
    Poly r;
    for (const auto& [e, c] : a) {
        bool keep = true;
        for (auto x : e)
            if (x % p != p - 1) {
                keep = false;
                break;
            }
        if (!keep) continue;
        Mono q(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            q[i] = static_cast<std::uint32_t>((e[i] - (p - 1)) / p);
        // Coefficients are already canonical residues; reuse them.
        auto it = r.find(q);
        if (it == r.end())
            r.emplace(std::move(q), c);
        else
            it->second += c;  // cannot collide: u is injective on kept terms
    }
    return r;
}

Poly u_iter(Poly a, std::uint64_t p, unsigned t) {
    for (unsigned i = 0; i < t; ++i) a = u_op(a, p);
    return a;
}

Poly frob(const Poly& a, std::uint64_t p) {
    Poly r;
    for (const auto& [e, c] : a) {
        Mono m(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            m[i] = e[i] * static_cast<std::uint32_t>(p);
        r.emplace(std::move(m), c);
    }
    return r;
}

bool divisible(const Poly& a, std::uint64_t d) {
    for (const auto& [e, c] : a)
        if (c % d != 0) return false;
    return true;
}

/* height recursion, dense over F_p */

namespace {

std::vector<Mono> monomials_upto(std::size_t k, unsigned D) {
    std::vector<Mono> out;
    Mono cur(k, 0);
    // enumerate exponent tuples with sum <= D, then sort graded-lex
    auto rec = [&](auto&& self, std::size_t pos, unsigned rem) -> void {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (unsigned i = 0; i <= rem; ++i) {
            cur[pos] = i;
            self(self, pos + 1, rem - i);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, D);
    std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
        unsigned da = 0, db = 0;
        for (auto x : a) da += x;
        for (auto x : b) db += x;
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

unsigned mono_deg(const Mono& m) {
    unsigned d = 0;
    for (auto x : m) d += x;
    return d;
}

using Row = std::vector<std::uint64_t>;
using Basis = std::map<std::size_t, Row>;  // lead column -> normalized row

Basis gauss(const std::vector<Row>& rows, std::uint64_t p) {
    Basis basis;
    for (const Row& r0 : rows) {
        Row r = r0;
        for (;;) {
            std::size_t lead = r.size();
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r[i]) {
                    lead = i;
                    break;
                }
            if (lead == r.size()) break;
            auto it = basis.find(lead);
            if (it != basis.end()) {
                const std::uint64_t c = r[lead];
                const Row& b = it->second;
                for (std::size_t i = 0; i < r.size(); ++i)
                    r[i] = (r[i] + (p - c % p) * b[i]) % p;
            } else {
                const std::uint64_t inv = inv_mod_p(r[lead], p);
                for (auto& x : r) x = x * inv % p;
                basis.emplace(lead, std::move(r));
                break;
            }
        }
    }
    return basis;
}

}  // namespace

int height(const Poly& f, std::size_t k, std::uint64_t p, unsigned D,
           unsigned nmax) {
    const std::uint64_t p2 = p * p;
    Poly fp1 = pw(f, p - 1, p, k);
    Poly fp1_2 = pw(f, p - 1, p2, k);
    Poly diff = sub(frob(fp1_2, p), pw(fp1_2, p, p2, k), p2);
    assert(divisible(diff, p));
    Poly delta;
    for (const auto& [e, c] : diff) {
        const std::uint64_t q = (c / p) % p;
        if (q) delta.emplace(e, q);
    }

    const auto mons = monomials_upto(k, D);
    std::map<Mono, std::size_t> idx;
    for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], i);

    auto tovec = [&](const Poly& g) {
        Row v(mons.size(), 0);
        for (const auto& [e, c] : g) {
            if (mono_deg(e) > D || c % p == 0) continue;
            v[idx.at(e)] = c % p;
        }
        return v;
    };
    auto topoly = [&](const Row& v) {
        Poly g;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]) g.emplace(mons[i], v[i]);
        return g;
    };
    auto slice_basis = [&](const std::vector<Poly>& gens) {
        std::vector<Row> rows;
        for (const auto& g : gens) {
            unsigned dg = 0;
            for (const auto& [e, c] : g) dg = std::max(dg, mono_deg(e));
            if (dg > D) continue;
            for (const auto& m : mons)
                if (mono_deg(m) + dg <= D)
                    rows.push_back(tovec(shift(g, m, p)));
        }
        return gauss(rows, p);
    };
    auto escapes = [&](const Basis& basis) {
        for (const auto& [lead, row] : basis)
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (!row[i]) continue;
                bool small = true;
                for (auto x : mons[i])
                    if (x > p - 1) {
                        small = false;
                        break;
                    }
                if (small) return true;
            }
        return false;
    };

    std::vector<Poly> gens{fp1};
    for (unsigned n = 1; n <= nmax; ++n) {
        Basis basis = slice_basis(gens);
        if (escapes(basis)) return static_cast<int>(n);

        // kernel of u mod p on the span
        std::vector<Row> rows;
        for (const auto& [lead, row] : basis) rows.push_back(row);
        std::vector<Poly> uimgs;
        for (const auto& r : rows) uimgs.push_back(u_op(topoly(r), p));
        std::set<Mono> allmon;
        for (const auto& im : uimgs)
            for (const auto& [e, c] : im) allmon.insert(e);
        std::vector<Row> cmat;
        for (const auto& e : allmon) {
            Row cr(rows.size(), 0);
            for (std::size_t j = 0; j < uimgs.size(); ++j) {
                auto it = uimgs[j].find(e);
                if (it != uimgs[j].end()) cr[j] = it->second % p;
            }
            cmat.push_back(std::move(cr));
        }
        Basis aug = gauss(cmat, p);
        std::set<std::size_t> piv;
        for (const auto& [lead, row] : aug) piv.insert(lead);

        std::vector<Poly> newgens{fp1};
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (piv.count(j)) continue;
            Row vec(rows.size(), 0);
            vec[j] = 1;
            for (auto it = aug.rbegin(); it != aug.rend(); ++it) {
                std::uint64_t s = 0;
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (i != it->first) s = (s + it->second[i] * vec[i]) % p;
                vec[it->first] = (p - s) % p;
            }
            Poly comb;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (vec[i] % p == 0) continue;
                comb = add(comb, scale(topoly(rows[i]), vec[i], p), p);
            }
            if (comb.empty()) continue;
            Poly img = u_op(mul(delta, comb, p), p);
            Poly imgp;
            for (const auto& [e, c] : img)
                if (c % p) imgp.emplace(e, c % p);
            if (!imgp.empty()) newgens.push_back(std::move(imgp));
        }
        gens = std::move(newgens);
    }
    return -1;
}

std::set<Poly> span_enumerate(const std::vector<Poly>& rows,
                              std::uint64_t mod) {
    std::set<Poly> out;
    std::vector<std::uint64_t> coef(rows.size(), 0);
    for (;;) {
        Poly acc;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (coef[i]) acc = add(acc, scale(rows[i], coef[i], mod), mod);
        out.insert(std::move(acc));
        std::size_t pos = 0;
        while (pos < coef.size()) {
            if (++coef[pos] < mod) break;
            coef[pos] = 0;
            ++pos;
        }
        if (pos == coef.size()) break;
    }
    return out;
}

/* bridges */

Poly from_modpoly(const qfs::ModPoly& g) {
    Poly r;
    for (const auto& [ev, c] : g.terms()) r.emplace(ev.e, c);
    return r;
}

qfs::ModPoly to_modpoly(const Poly& a, qfs::RingPtr cfg, unsigned prec) {
    qfs::ModPoly g(cfg, prec);
    for (const auto& [e, c] : a)
        g.set_coeff(qfs::ExponentVector(e), c);
    return g;
}

}  // namespace oracle
