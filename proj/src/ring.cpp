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

#include "qfsplit/ring.hpp"

#include <cctype>
#include <set>

namespace qfs {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

}  // namespace

RingConfig::RingConfig(std::vector<std::string> vars_, std::uint64_t p_,
                       unsigned W_)
    : vars(std::move(vars_)), p(p_), W(W_) {
    if (vars.empty())
        throw error("ring needs at least one variable");
    if (vars.size() > 16)
        throw error("at most 16 variables are supported");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (!valid_identifier(v))
            throw error("invalid variable name '" + v + "'");
        if (!seen.insert(v).second)
            throw error("duplicate variable name '" + v + "'");
    }
    if (!is_prime_u64(p))
        throw error("p = " + std::to_string(p) + " is not prime");
    if (W < 1)
        throw error("precision W must be at least 1");
    p_powers_.assign(W + 1, 1);
    for (unsigned s = 1; s <= W; ++s) {
        unsigned __int128 v = static_cast<unsigned __int128>(p_powers_[s - 1]) * p;
        if (v >= (static_cast<unsigned __int128>(1) << 63))
            throw error("p^W does not fit in 63 bits (p = " + std::to_string(p) +
                        ", W = " + std::to_string(W) + ")");
        p_powers_[s] = static_cast<std::uint64_t>(v);
    }
}

std::uint64_t RingConfig::pow_p(unsigned s) const {
    if (s > W)
        throw precision_error("requested p^" + std::to_string(s) +
                              " beyond configured precision W = " +
                              std::to_string(W));
    return p_powers_[s];
}

RingPtr make_ring(std::vector<std::string> vars, std::uint64_t p, unsigned W) {
    return std::make_shared<const RingConfig>(std::move(vars), p, W);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_unit_mod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on (a, m); signed accumulators stay within int128
    a %= m;
    if (a == 0) throw error("attempted to invert 0");
    __int128 t0 = 0, t1 = 1;
    std::uint64_t r0 = m, r1 = a;
    while (r1 != 0) {
        std::uint64_t q = r0 / r1;
        std::uint64_t r2 = r0 - q * r1;
        __int128 t2 = t0 - static_cast<__int128>(q) * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw error("attempted to invert a non-unit residue " +
                    std::to_string(a) + " mod " + std::to_string(m));
    __int128 t = t0 % static_cast<__int128>(m);
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

unsigned val_p(std::uint64_t c, std::uint64_t p) {
    if (c == 0) throw error("valuation of 0 is undefined");
    unsigned v = 0;
    while (c % p == 0) {
        c /= p;
        ++v;
    }
    return v;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace qfs
