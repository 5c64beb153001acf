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

#include "qfsplit/semilinear.hpp"

namespace qfs {

std::map<ExponentVector, ModPoly, GradedLexLess>
digit_decompose(const ModPoly& a) {
    std::map<ExponentVector, ModPoly, GradedLexLess> digits;
    const std::uint64_t p = a.cfg().p;
    for (const auto& [ev, c] : a.terms()) {
        auto [q, r] = ev.split(p);
        auto it = digits.find(r);
        if (it == digits.end())
            it = digits.emplace(r, ModPoly(a.ring(), a.prec())).first;
        it->second.set_coeff(q, c);
    }
    return digits;
}

ModPoly u_op(const ModPoly& a) {
    ModPoly out(a.ring(), a.prec());
    const std::uint64_t p = a.cfg().p;
    const std::uint32_t top = static_cast<std::uint32_t>(p - 1);
    for (const auto& [ev, c] : a.terms()) {
        auto [q, r] = ev.split(p);
        if (r.all_le(top) && r.total_degree() ==
                static_cast<std::uint64_t>(top) * ev.size()) {
            // residue digits are exactly (p-1, ..., p-1)
            out.set_coeff(q, c);
        }
    }
    return out;
}

ModPoly u_iter(const ModPoly& a, unsigned t) {
    ModPoly out = a;
    for (unsigned i = 0; i < t; ++i) out = u_op(out);
    return out;
}

ModPoly delta1(const ModPoly& a) {
    if (a.prec() < 2)
        throw precision_error(
            "delta1 needs precision >= 2, have " + std::to_string(a.prec()));
    ModPoly diff = a.frobenius_lift() - a.pow(a.cfg().p);
    return diff.divide_exact_by_p();
}

}  // namespace qfs
