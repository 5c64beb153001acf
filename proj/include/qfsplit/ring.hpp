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

#ifndef QFSPLIT_RING_HPP
#define QFSPLIT_RING_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfs {

/* error hierarchy */

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the byte offset of the offending token.
class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An operation needed more p-adic digits than the operand carries.
class precision_error : public error {
public:
    using error::error;
};

/// Exact division failed; the message names the offending monomial.
class divisibility_error : public error {
public:
    using error::error;
};

/* ring configuration */

/// Ambient ring A = (Z/p^W)[x_1, ..., x_k]: variable names, the prime p,
/// and the maximum working precision W.  p^W must fit in 63 bits so that
/// residues stay in uint64_t and products in unsigned __int128.
struct RingConfig {
    std::vector<std::string> vars;
    std::uint64_t p = 2;
    unsigned W = 1;

    RingConfig(std::vector<std::string> vars_, std::uint64_t p_, unsigned W_);

    std::size_t nvars() const { return vars.size(); }

    /// p^s for 0 <= s <= W (precomputed, exact).
    std::uint64_t pow_p(unsigned s) const;

    /// Same ambient ring: equal variable lists, p, and W.
    bool same_ring(const RingConfig& o) const {
        return p == o.p && W == o.W && vars == o.vars;
    }

private:
    std::vector<std::uint64_t> p_powers_;  // p^0 .. p^W
};

using RingPtr = std::shared_ptr<const RingConfig>;

/// Convenience factory.
RingPtr make_ring(std::vector<std::string> vars, std::uint64_t p, unsigned W);

/* residue arithmetic mod m, m < 2^63 */

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t s = a + b;  // no overflow: a, b < 2^63
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Inverse of a unit modulo m (extended Euclid); throws if gcd(a, m) != 1.
std::uint64_t inv_unit_mod(std::uint64_t a, std::uint64_t m);

/// p-adic valuation of a nonzero residue c in [1, p^W).
unsigned val_p(std::uint64_t c, std::uint64_t p);

/// True if n is prime (trial division; n < 2^63 but callers pass small p).
bool is_prime_u64(std::uint64_t n);

}  // namespace qfs

#endif  // QFSPLIT_RING_HPP
