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

#include "qfsplit/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace qfs {

namespace {

struct Parser {
    const std::string& s;
    RingPtr cfg;
    std::size_t i = 0;
    std::uint64_t mod;
    std::map<std::string, std::size_t> var_index;

    Parser(const std::string& text, RingPtr c)
        : s(text), cfg(std::move(c)), mod(cfg->pow_p(cfg->W)) {
        for (std::size_t v = 0; v < cfg->vars.size(); ++v)
            var_index.emplace(cfg->vars[v], v);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, i);
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    bool at_end() {
        skip_ws();
        return i >= s.size();
    }

    ModPoly parse_expr() {
        skip_ws();
        const bool neg = eat('-');
        ModPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    ModPoly parse_term() {
        ModPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    ModPoly parse_factor() {
        ModPoly base = parse_base();
        if (eat('^')) return base.pow(parse_exponent());
        return base;
    }

    ModPoly parse_base() {
        skip_ws();
        if (i >= s.size()) fail("expected a variable, number or '('");
        const char c = s[i];
        if (c == '(') {
            ++i;
            ModPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ModPoly::constant(cfg, cfg->W, parse_coefficient());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i;
            std::string name = parse_ident();
            auto it = var_index.find(name);
            if (it == var_index.end()) {
                i = start;
                fail("unknown variable '" + name +
                     "' (implicit multiplication is not supported)");
            }
            std::vector<std::uint32_t> e(cfg->vars.size(), 0);
            e[it->second] = 1;
            return ModPoly::monomial(cfg, cfg->W,
                                     ExponentVector(std::move(e)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string parse_ident() {
        std::size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        std::string name = s.substr(i, j - i);
        i = j;
        return name;
    }

    /// Coefficient literal of any length, reduced mod p^W on the fly.
    std::uint64_t parse_coefficient() {
        std::uint64_t v = 0;
        bool any = false;
        while (i < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[i]))) {
            any = true;
            v = mul_mod(v, 10, mod);
            v = add_mod(v, static_cast<std::uint64_t>(s[i] - '0'), mod);
            ++i;
        }
        if (!any) fail("expected a number");
        return v;
    }

    /// Exponent literal, exact, limited to 2^32.
    std::uint64_t parse_exponent() {
        skip_ws();
        std::uint64_t v = 0;
        bool any = false;
        constexpr std::uint64_t kMax = std::uint64_t(1) << 32;
        while (i < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[i]))) {
            any = true;
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > kMax) fail("exponent exceeds 2^32");
            ++i;
        }
        if (!any) fail("expected an exponent after '^'");
        return v;
    }
};

}  // namespace

ModPoly parse_poly(const std::string& text, RingPtr cfg) {
    Parser p(text, cfg);
    if (p.at_end()) p.fail("empty input");
    ModPoly result = p.parse_expr();
    if (!p.at_end()) p.fail("unexpected trailing input");
    return result;
}

ExponentVector parse_monomial(const std::string& text, RingPtr cfg) {
    ModPoly g = parse_poly(text, cfg);
    if (g.num_terms() != 1)
        throw parse_error("expected a single monomial, got " +
                              std::to_string(g.num_terms()) + " terms",
                          0);
    const auto& [ev, c] = *g.terms().begin();
    if (c != 1)
        throw parse_error("monomial must have coefficient 1", 0);
    return ev;
}

std::string format_monomial(const RingConfig& cfg, const ExponentVector& ev) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < ev.e.size(); ++i) {
        if (ev.e[i] == 0) continue;
        if (any) os << "*";
        any = true;
        os << cfg.vars[i];
        if (ev.e[i] > 1) os << "^" << ev.e[i];
    }
    if (!any) return "1";
    return os.str();
}

std::string format_poly(const ModPoly& g) {
    if (g.is_zero()) return "0";
    const RingConfig& cfg = g.cfg();
    std::ostringstream os;
    bool first = true;
    // Graded-lex descending: leading term first.
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        const auto& [ev, c] = *it;
        if (!first) os << " + ";
        first = false;
        const bool constant_term = ev.total_degree() == 0;
        if (c != 1 || constant_term) {
            os << c;
            if (!constant_term) os << "*";
        }
        if (!constant_term) os << format_monomial(cfg, ev);
    }
    return os.str();
}

}  // namespace qfs
