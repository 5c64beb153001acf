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

#include "qfsplit/witt.hpp"

#include <random>
#include <sstream>

namespace qfs::witt {

/* IntPoly2 arithmetic */

IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b) {
    IntPoly2 r = a;
    for (const auto& [e, c] : b.t) {
        auto it = r.t.find(e);
        if (it == r.t.end()) {
            r.t.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.t.erase(it);
        }
    }
    return r;
}

IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b) {
    IntPoly2 r = a;
    for (const auto& [e, c] : b.t) {
        auto it = r.t.find(e);
        if (it == r.t.end()) {
            r.t.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) r.t.erase(it);
        }
    }
    return r;
}

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
    IntPoly2 r;
    for (const auto& [ea, ca] : a.t) {
        for (const auto& [eb, cb] : b.t) {
            std::array<std::uint32_t, 2> e{ea[0] + eb[0], ea[1] + eb[1]};
            auto it = r.t.find(e);
            if (it == r.t.end()) {
                cpp_int c = ca * cb;
                if (c != 0) r.t.emplace(e, std::move(c));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.t.erase(it);
            }
        }
    }
    return r;
}

std::string to_string(const IntPoly2& a) {
    if (a.t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.t) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e[0]) os << "*s^" << e[0];
        if (e[1]) os << "*t^" << e[1];
    }
    return os.str();
}

IntPoly2 entry_ops<IntPoly2>::pow(const IntPoly2& a, std::uint64_t e) {
    IntPoly2 r = IntPoly2::constant(1);
    IntPoly2 base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool entry_ops<IntPoly2>::divide_exact(const IntPoly2& a, const cpp_int& d,
                                       IntPoly2& out) {
    IntPoly2 q;
    for (const auto& [e, c] : a.t) {
        if (c % d != 0) return false;
        q.t.emplace(e, c / d);
    }
    out = std::move(q);
    return true;
}

IntPoly2 entry_ops<IntPoly2>::scale(const cpp_int& c, const IntPoly2& a) {
    IntPoly2 r;
    if (c == 0) return r;
    for (const auto& [e, co] : a.t) r.t.emplace(e, c * co);
    return r;
}

/* randomized self tests */

namespace {

cpp_int int_pow(cpp_int a, unsigned e) {
    cpp_int r = 1;
    while (e--) r *= a;
    return r;
}

cpp_int random_int(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-40, 40);
    return d(rng);
}

IntPoly2 random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expd(0, 3), coeff(-9, 9);
    IntPoly2 r;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::array<std::uint32_t, 2> e{static_cast<std::uint32_t>(expd(rng)),
                                       static_cast<std::uint32_t>(expd(rng))};
        cpp_int c = coeff(rng);
        if (c == 0) continue;
        auto it = r.t.find(e);
        if (it == r.t.end())
            r.t.emplace(e, std::move(c));
        else {
            it->second += c;
            if (it->second == 0) r.t.erase(it);
        }
    }
    return r;
}

void record_failure(SelfTestReport& rep, std::uint64_t trial,
                    const std::string& what) {
    ++rep.failures;
    if (rep.first_failure.empty()) {
        rep.first_failure = "trial " + std::to_string(trial) + ": " + what;
    }
}

}  // namespace

SelfTestReport check_ghost_image_of_pW(std::uint64_t p, unsigned m, unsigned n,
                                       std::uint64_t trials,
                                       std::uint64_t seed) {
    SelfTestReport rep{"ghost_image_of_pW", trials, 0, seed, {}};
    std::mt19937_64 rng(seed);
    cpp_int pm = int_pow(p, m);
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Forward: entries in p^m A force p^(m+i) | ghost_i.
        Entries<IntPoly2> w(n);
        for (auto& e : w) e = entry_ops<IntPoly2>::scale(pm, random_poly(rng));
        Entries<IntPoly2> g = ghost(w, p);
        for (unsigned i = 0; i < n; ++i) {
            IntPoly2 q;
            if (!entry_ops<IntPoly2>::divide_exact(g[i], int_pow(p, m + i), q)) {
                record_failure(rep, t,
                               "ghost component " + std::to_string(i) +
                                   " of a p^m-divisible vector is not "
                                   "divisible by p^(m+i)");
            }
        }
        // Converse: ghost components in p^(m+i) A invert to entries in
        // p^m A.
        Entries<IntPoly2> gv(n);
        for (unsigned i = 0; i < n; ++i)
            gv[i] = entry_ops<IntPoly2>::scale(int_pow(p, m + i),
                                               random_poly(rng));
        try {
            Entries<IntPoly2> a = from_ghost(gv, p);
            for (unsigned i = 0; i < n; ++i) {
                IntPoly2 q;
                if (!entry_ops<IntPoly2>::divide_exact(a[i], pm, q)) {
                    record_failure(rep, t,
                                   "inverted entry " + std::to_string(i) +
                                       " is not divisible by p^m");
                }
            }
        } catch (const ghost_image_error& ex) {
            record_failure(rep, t, std::string("from_ghost rejected a vector "
                                              "in the image: ") +
                                       ex.what());
        }
    }
    return rep;
}

SelfTestReport check_ghost_well_defined_mod_p(std::uint64_t p, unsigned n,
                                              std::uint64_t trials,
                                              std::uint64_t seed) {
    SelfTestReport rep{"ghost_well_defined_mod_p", trials, 0, seed, {}};
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Entries<cpp_int> a(n), b(n), a2(n), b2(n);
        for (unsigned i = 0; i < n; ++i) {
            a[i] = random_int(rng);
            b[i] = random_int(rng);
            a2[i] = a[i] + p * random_int(rng);
            b2[i] = b[i] + p * random_int(rng);
        }
        // ghost_r only moves by a multiple of p^(r+1) under an entrywise
        // perturbation by multiples of p.
        Entries<cpp_int> ga = ghost(a, p), ga2 = ghost(a2, p);
        for (unsigned r = 0; r < n; ++r) {
            if ((ga[r] - ga2[r]) % int_pow(p, r + 1) != 0) {
                record_failure(rep, t,
                               "ghost component " + std::to_string(r) +
                                   " moved by a non-multiple of p^(r+1)");
            }
        }
        // Sum and product descend entrywise mod p.
        Entries<cpp_int> s1 = witt_add(a, b, p), s2 = witt_add(a2, b2, p);
        Entries<cpp_int> m1 = witt_mul(a, b, p), m2 = witt_mul(a2, b2, p);
        for (unsigned i = 0; i < n; ++i) {
            if ((s1[i] - s2[i]) % static_cast<std::int64_t>(p) != 0)
                record_failure(rep, t,
                               "sum entry " + std::to_string(i) +
                                   " changed mod p under input perturbation");
            if ((m1[i] - m2[i]) % static_cast<std::int64_t>(p) != 0)
                record_failure(rep, t,
                               "product entry " + std::to_string(i) +
                                   " changed mod p under input perturbation");
        }
    }
    return rep;
}

SelfTestReport check_ring_laws(std::uint64_t p, unsigned n,
                               std::uint64_t trials, std::uint64_t seed) {
    SelfTestReport rep{"ring_laws", trials, 0, seed, {}};
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        Entries<cpp_int> a(n), b(n);
        for (unsigned i = 0; i < n; ++i) {
            a[i] = random_int(rng);
            b[i] = random_int(rng);
        }
        if (from_ghost(ghost(a, p), p) != a)
            record_failure(rep, t, "from_ghost(ghost(a)) != a");

        // Level-2 truncations match the universal closed forms.
        if (n >= 2) {
            Entries<cpp_int> a2{a[0], a[1]}, b2{b[0], b[1]};
            Entries<cpp_int> s = witt_add(a2, b2, p), m = witt_mul(a2, b2, p);
            cpp_int a0p = entry_ops<cpp_int>::pow(a[0], p);
            cpp_int b0p = entry_ops<cpp_int>::pow(b[0], p);
            cpp_int sump = entry_ops<cpp_int>::pow(a[0] + b[0], p);
            cpp_int carry = (a0p + b0p - sump) / static_cast<std::int64_t>(p);
            if (s[0] != a[0] + b[0] || s[1] != a[1] + b[1] + carry)
                record_failure(rep, t, "level-2 sum closed form mismatch");
            if (m[0] != a[0] * b[0] ||
                m[1] != a0p * b[1] + b0p * a[1] + p * a[1] * b[1])
                record_failure(rep, t, "level-2 product closed form mismatch");
        }

        // ghost(V a)_0 = 0 and ghost(V a)_r = p * ghost(a)_(r-1).
        Entries<cpp_int> va = verschiebung(a);
        Entries<cpp_int> gva = ghost(va, p), ga = ghost(a, p);
        if (gva[0] != 0) record_failure(rep, t, "ghost(V a)_0 != 0");
        for (unsigned r = 1; r <= n; ++r) {
            if (gva[r] != p * ga[r - 1])
                record_failure(rep, t, "ghost(V a) shift law failed at " +
                                           std::to_string(r));
        }

        // Res(V(a)) == V(Res(a)).
        if (n >= 1) {
            if (restriction(verschiebung(a)) != verschiebung(restriction(a)))
                record_failure(rep, t, "Res o V != V o Res");
        }

        // Teichmueller lifts are multiplicative.
        Entries<cpp_int> prod =
            witt_mul(teichmuller(a[0], n), teichmuller(b[0], n), p);
        if (prod != teichmuller(cpp_int(a[0] * b[0]), n))
            record_failure(rep, t, "[x][y] != [xy]");
    }
    return rep;
}

}  // namespace qfs::witt
