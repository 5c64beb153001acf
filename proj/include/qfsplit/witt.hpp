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

#ifndef QFSPLIT_WITT_HPP
#define QFSPLIT_WITT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qfsplit/ring.hpp"

// Truncated Witt vectors over p-torsion-free coefficient rings, exact,
// with arithmetic routed through ghost components:
//     ghost_r(a_0, ..., a_{n-1}) = sum over s <= r of p^s * a_s^(p^(r-s)).
// Entries are arbitrary-precision integers or integer polynomials in at
// most two variables.  This module is a property-test oracle: it is
// deliberately independent of the ModPoly code path.

namespace qfs::witt {

using boost::multiprecision::cpp_int;

/// A ghost vector that cannot be inverted back to Witt coordinates;
/// carries the first failing entry index.
class ghost_image_error : public error {
public:
    ghost_image_error(unsigned index, const std::string& what_entry)
        : error("ghost vector is not in the ghost image at index " +
                std::to_string(index) + ": " + what_entry),
          index_(index) {}
    unsigned index() const { return index_; }

private:
    unsigned index_;
};

/* entry rings */

/// Sparse integer polynomial in two variables with cpp_int coefficients;
/// the minimal ring-valued entry type the oracle trials need.
struct IntPoly2 {
    std::map<std::array<std::uint32_t, 2>, cpp_int> t;

    static IntPoly2 constant(cpp_int c) {
        IntPoly2 r;
        if (c != 0) r.t[{0, 0}] = std::move(c);
        return r;
    }
    bool operator==(const IntPoly2&) const = default;
};

IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b);
IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b);
IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
std::string to_string(const IntPoly2& a);

/// Uniform operations over the supported entry rings.
template <class R>
struct entry_ops;

template <>
struct entry_ops<cpp_int> {
    static cpp_int zero() { return 0; }
    static bool is_zero(const cpp_int& a) { return a == 0; }
    static cpp_int pow(cpp_int a, std::uint64_t e) {
        cpp_int r = 1;
        while (e) {
            if (e & 1) r *= a;
            e >>= 1;
            if (e) a *= a;
        }
        return r;
    }
    static cpp_int scale(const cpp_int& c, const cpp_int& a) { return c * a; }
    /// Exact division by a positive integer; false if not divisible.
    static bool divide_exact(const cpp_int& a, const cpp_int& d, cpp_int& out) {
        cpp_int q = a / d, r = a % d;
        if (r != 0) return false;
        out = q;
        return true;
    }
    static std::string str(const cpp_int& a) { return a.str(); }
};

template <>
struct entry_ops<IntPoly2> {
    static IntPoly2 zero() { return {}; }
    static bool is_zero(const IntPoly2& a) { return a.t.empty(); }
    static IntPoly2 pow(const IntPoly2& a, std::uint64_t e);
    static bool divide_exact(const IntPoly2& a, const cpp_int& d, IntPoly2& out);
    static IntPoly2 scale(const cpp_int& c, const IntPoly2& a);
    static std::string str(const IntPoly2& a) { return to_string(a); }
};

/* ghost machinery */

template <class R>
using Entries = std::vector<R>;

/// Ghost components of a Witt vector, exact.
template <class R>
Entries<R> ghost(const Entries<R>& w, std::uint64_t p) {
    using ops = entry_ops<R>;
    Entries<R> g;
    g.reserve(w.size());
    for (std::size_t r = 0; r < w.size(); ++r) {
        R acc = ops::zero();
        cpp_int ps = 1;
        for (std::size_t s = 0; s <= r; ++s) {
            std::uint64_t q = 1;
            for (std::size_t i = 0; i < r - s; ++i) q *= p;
            acc = acc + ops::scale(ps, ops::pow(w[s], q));
            ps *= p;
        }
        g.push_back(std::move(acc));
    }
    return g;
}

/// The unique Witt vector with the given ghost vector, by back-
/// substitution with exact divisions; throws ghost_image_error at the
/// first entry where the required division fails.
template <class R>
Entries<R> from_ghost(const Entries<R>& g, std::uint64_t p) {
    using ops = entry_ops<R>;
    Entries<R> a;
    a.reserve(g.size());
    cpp_int pr = 1;
    for (std::size_t r = 0; r < g.size(); ++r) {
        R rest = ops::zero();
        cpp_int ps = 1;
        for (std::size_t s = 0; s < r; ++s) {
            std::uint64_t q = 1;
            for (std::size_t i = 0; i < r - s; ++i) q *= p;
            rest = rest + ops::scale(ps, ops::pow(a[s], q));
            ps *= p;
        }
        R num = g[r] - rest;
        R quot = ops::zero();
        if (!ops::divide_exact(num, pr, quot))
            throw ghost_image_error(static_cast<unsigned>(r), ops::str(num));
        a.push_back(std::move(quot));
        pr *= p;
    }
    return a;
}

template <class R>
void check_compatible(const Entries<R>& a, const Entries<R>& b) {
    if (a.size() != b.size())
        throw error("Witt vectors of different lengths");
}

/// Sum through ghost coordinates (always lands back in the image over a
/// p-torsion-free entry ring).
template <class R>
Entries<R> witt_add(const Entries<R>& a, const Entries<R>& b, std::uint64_t p) {
    check_compatible(a, b);
    Entries<R> ga = ghost(a, p), gb = ghost(b, p);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = ga[i] + gb[i];
    return from_ghost(ga, p);
}

/// Product through ghost coordinates.
template <class R>
Entries<R> witt_mul(const Entries<R>& a, const Entries<R>& b, std::uint64_t p) {
    check_compatible(a, b);
    Entries<R> ga = ghost(a, p), gb = ghost(b, p);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = ga[i] * gb[i];
    return from_ghost(ga, p);
}

/// Shift V: prepends a zero entry (length grows by one).
template <class R>
Entries<R> verschiebung(const Entries<R>& a) {
    Entries<R> r;
    r.reserve(a.size() + 1);
    r.push_back(entry_ops<R>::zero());
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

/// Restriction: drops the last entry.
template <class R>
Entries<R> restriction(const Entries<R>& a) {
    if (a.empty()) throw error("restriction of an empty Witt vector");
    return Entries<R>(a.begin(), a.end() - 1);
}

/// Teichmueller lift [a] = (a, 0, ..., 0) of length n.
template <class R>
Entries<R> teichmuller(const R& a, std::size_t n) {
    Entries<R> r(n, entry_ops<R>::zero());
    if (n == 0) throw error("Teichmueller lift needs length >= 1");
    r[0] = a;
    return r;
}

/* self tests */

/// Outcome of a randomized law check; zero failures means the law held
/// on every trial.  The seed makes the run reproducible.
struct SelfTestReport {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t seed = 0;
    std::string first_failure;  // empty when all trials passed
};

/// ghost(W_n(p^m A)) = direct sum of p^(m+i) A: forward divisibility of
/// ghost components and converse integrality of from_ghost, randomized
/// over integer-polynomial entries.
SelfTestReport check_ghost_image_of_pW(std::uint64_t p, unsigned m, unsigned n,
                                       std::uint64_t trials, std::uint64_t seed);

/// Entrywise perturbation by multiples of p moves ghost component r by
/// a multiple of p^(r+1) only, and sums/products of perturbed inputs
/// agree entrywise mod p with the unperturbed ones.
SelfTestReport check_ghost_well_defined_mod_p(std::uint64_t p, unsigned n,
                                              std::uint64_t trials,
                                              std::uint64_t seed);

/// Ring laws routed through ghost coordinates: from_ghost o ghost
/// identity, the n=2 universal sum/product formulas, ghost(V alpha)
/// shifting, Teichmueller multiplicativity, Res/V commutation.
SelfTestReport check_ring_laws(std::uint64_t p, unsigned n,
                               std::uint64_t trials, std::uint64_t seed);

}  // namespace qfs::witt

#endif  // QFSPLIT_WITT_HPP
