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

#include "qfsplit/modpoly.hpp"

#include <algorithm>
#include <string>

namespace qfs {

namespace {

std::string describe_monomial(const ExponentVector& ev) {
    std::string s = "(";
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ev[i]);
    }
    return s + ")";
}

}  // namespace

/* ExponentVector */

ExponentVector ExponentVector::plus(const ExponentVector& o) const {
    ExponentVector r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t s = std::uint64_t(e[i]) + o.e[i];
        if (s > 0xFFFFFFFFull)
            throw error("exponent overflow: entry " + std::to_string(i) +
                        " exceeds 2^32 in a product");
        r.e[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

ExponentVector ExponentVector::minus(const ExponentVector& o) const {
    ExponentVector r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < o.e[i])
            throw error("exponent underflow in monomial quotient");
        r.e[i] = e[i] - o.e[i];
    }
    return r;
}

std::pair<ExponentVector, ExponentVector>
ExponentVector::split(std::uint64_t p) const {
    ExponentVector q(e.size()), r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        q.e[i] = static_cast<std::uint32_t>(e[i] / p);
        r.e[i] = static_cast<std::uint32_t>(e[i] % p);
    }
    return {q, r};
}

ExponentVector ExponentVector::times(std::uint64_t p) const {
    ExponentVector r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t s = std::uint64_t(e[i]) * p;
        if (s > 0xFFFFFFFFull)
            throw error("exponent overflow: entry " + std::to_string(i) +
                        " exceeds 2^32 under the Frobenius lift");
        r.e[i] = static_cast<std::uint32_t>(s);
    }
    return r;
}

std::vector<ExponentVector> monomials_up_to(std::size_t k, std::uint32_t D) {
    std::vector<ExponentVector> out;
    ExponentVector cur(k);
    // depth-first enumeration, then a sort into graded-lex order
    std::vector<std::pair<std::size_t, std::uint32_t>> stack;
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t rem) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t v = 0; v <= rem; ++v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, D);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

/* ModPoly */

ModPoly::ModPoly(RingPtr cfg, unsigned prec) : cfg_(std::move(cfg)), prec_(prec) {
    if (!cfg_) throw error("null ring configuration");
    if (prec_ < 1 || prec_ > cfg_->W)
        throw precision_error("polynomial precision " + std::to_string(prec_) +
                              " outside [1, W = " + std::to_string(cfg_->W) + "]");
}

ModPoly ModPoly::constant(RingPtr cfg, unsigned prec, std::uint64_t c) {
    ModPoly r(std::move(cfg), prec);
    r.set_coeff(ExponentVector(r.cfg().nvars()), c);
    return r;
}

ModPoly ModPoly::monomial(RingPtr cfg, unsigned prec, ExponentVector ev,
                          std::uint64_t c) {
    ModPoly r(std::move(cfg), prec);
    if (ev.size() != r.cfg().nvars())
        throw error("exponent vector arity mismatch");
    r.set_coeff(ev, c);
    return r;
}

std::uint64_t ModPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [ev, c] : terms_) d = std::max(d, ev.total_degree());
    return d;
}

std::uint64_t ModPoly::coeff(const ExponentVector& ev) const {
    auto it = terms_.find(ev);
    return it == terms_.end() ? 0 : it->second;
}

void ModPoly::set_coeff(const ExponentVector& ev, std::uint64_t c) {
    c %= modulus();
    if (c == 0)
        terms_.erase(ev);
    else
        terms_[ev] = c;
}

ModPoly ModPoly::reduce_precision(unsigned s) const {
    if (s == prec_) return *this;
    if (s > prec_)
        throw precision_error("cannot raise precision from " +
                              std::to_string(prec_) + " to " + std::to_string(s));
    ModPoly r(cfg_, s);
    std::uint64_t m = cfg_->pow_p(s);
    auto hint = r.terms_.end();
    for (const auto& [ev, c] : terms_) {
        std::uint64_t cc = c % m;
        if (cc) hint = r.terms_.emplace_hint(hint, ev, cc);
    }
    return r;
}

void ModPoly::check_same_ring(const ModPoly& o) const {
    if (cfg_ != o.cfg_ && !cfg_->same_ring(*o.cfg_))
        throw error("operands live in different rings");
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
    check_same_ring(o);
    unsigned s = std::min(prec_, o.prec_);
    ModPoly r = reduce_precision(s);
    std::uint64_t m = r.modulus();
    for (const auto& [ev, c] : o.terms_) {
        std::uint64_t sum = add_mod(r.coeff(ev), c % m, m);
        r.set_coeff(ev, sum);
    }
    return r;
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    check_same_ring(o);
    unsigned s = std::min(prec_, o.prec_);
    ModPoly r = reduce_precision(s);
    std::uint64_t m = r.modulus();
    for (const auto& [ev, c] : o.terms_) {
        std::uint64_t d = sub_mod(r.coeff(ev), c % m, m);
        r.set_coeff(ev, d);
    }
    return r;
}

ModPoly ModPoly::operator-() const {
    ModPoly r(cfg_, prec_);
    std::uint64_t m = modulus();
    auto hint = r.terms_.end();
    for (const auto& [ev, c] : terms_)
        hint = r.terms_.emplace_hint(hint, ev, m - c);
    return r;
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    check_same_ring(o);
    unsigned s = std::min(prec_, o.prec_);
    ModPoly r(cfg_, s);
    if (is_zero() || o.is_zero()) return r;
    std::uint64_t m = r.modulus();
    // accumulate into the sorted map; iterate the smaller operand outermost
    const ModPoly& a = num_terms() <= o.num_terms() ? *this : o;
    const ModPoly& b = num_terms() <= o.num_terms() ? o : *this;
    for (const auto& [ea, ca] : a.terms_) {
        std::uint64_t cam = ca % m;
        if (cam == 0) continue;
        for (const auto& [eb, cb] : b.terms_) {
            std::uint64_t c = mul_mod(cam, cb % m, m);
            if (c == 0) continue;
            ExponentVector ev = ea.plus(eb);
            auto [it, inserted] = r.terms_.try_emplace(ev, c);
            if (!inserted) {
                it->second = add_mod(it->second, c, m);
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

bool ModPoly::operator==(const ModPoly& o) const {
    return prec_ == o.prec_ && cfg_->same_ring(*o.cfg_) && terms_ == o.terms_;
}

ModPoly ModPoly::scale(std::uint64_t c) const {
    ModPoly r(cfg_, prec_);
    std::uint64_t m = modulus();
    c %= m;
    if (c == 0) return r;
    auto hint = r.terms_.end();
    for (const auto& [ev, cc] : terms_) {
        std::uint64_t v = mul_mod(cc, c, m);
        if (v) hint = r.terms_.emplace_hint(hint, ev, v);
    }
    return r;
}

ModPoly ModPoly::shifted(const ExponentVector& ev, std::uint64_t c) const {
    if (ev.size() != cfg_->nvars())
        throw error("exponent vector arity mismatch");
    ModPoly r(cfg_, prec_);
    std::uint64_t m = modulus();
    c %= m;
    if (c == 0) return r;
    auto hint = r.terms_.end();
    for (const auto& [e0, c0] : terms_) {
        std::uint64_t v = mul_mod(c0, c, m);
        if (v) hint = r.terms_.emplace_hint(hint, e0.plus(ev), v);
    }
    return r;
}

ModPoly ModPoly::pow(std::uint64_t m) const {
    ModPoly r = constant(cfg_, prec_, 1);
    if (m == 0) return r;
    ModPoly b = *this;
    while (true) {
        if (m & 1) r = r * b;
        m >>= 1;
        if (m == 0) break;
        b = b * b;
    }
    return r;
}

ModPoly ModPoly::frobenius_lift() const {
    ModPoly r(cfg_, prec_);
    auto hint = r.terms_.end();
    for (const auto& [ev, c] : terms_)
        hint = r.terms_.emplace_hint(hint, ev.times(cfg_->p), c);
    return r;
}

ModPoly ModPoly::divide_exact_by_p() const {
    if (prec_ < 2)
        throw precision_error(
            "exact division by p needs precision >= 2, have " +
            std::to_string(prec_));
    ModPoly r(cfg_, prec_ - 1);
    std::uint64_t m = r.modulus();
    auto hint = r.terms_.end();
    for (const auto& [ev, c] : terms_) {
        if (c % cfg_->p != 0)
            throw divisibility_error(
                "coefficient " + std::to_string(c) + " of monomial " +
                describe_monomial(ev) + " is not divisible by p");
        std::uint64_t v = (c / cfg_->p) % m;
        if (v) hint = r.terms_.emplace_hint(hint, ev, v);
    }
    return r;
}

bool ModPoly::in_pr_ideal(unsigned r) const {
    if (r >= prec_)
        throw precision_error("membership in (p^" + std::to_string(r) +
                              ") is vacuous at precision " +
                              std::to_string(prec_));
    std::uint64_t pr = cfg_->pow_p(r);
    for (const auto& [ev, c] : terms_)
        if (c % pr != 0) return false;
    return true;
}

bool ModPoly::in_mp_plus_ps(unsigned s) const {
    return !escape_witness(s).has_value();
}

std::optional<ExponentVector> ModPoly::escape_witness(unsigned s) const {
    if (s > prec_)
        throw precision_error("membership modulo (m^[p], p^" +
                              std::to_string(s) +
                              ") undecidable at precision " +
                              std::to_string(prec_));
    std::uint64_t ps = cfg_->pow_p(s);
    std::uint32_t bound = static_cast<std::uint32_t>(cfg_->p - 1);
    for (const auto& [ev, c] : terms_)  // map order = graded-lex ascending
        if (ev.all_le(bound) && c % ps != 0) return ev;
    return std::nullopt;
}

}  // namespace qfs
