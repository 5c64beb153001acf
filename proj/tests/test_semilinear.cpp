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

#include <utility>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qfsplit/semilinear.hpp"
#include "test_util.hpp"

using namespace qfs;
using tutil::P;

namespace {

const std::vector<std::pair<std::uint64_t, unsigned>> kRings = {
    {2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}};

}  // namespace

TEST_SUITE("semilinear") {
    TEST_CASE("digit extraction micro-cases") {
        auto cfg = tutil::ring_xy(2, 1);
        // the digit rule is componentwise: x^3 alone dies because its
        // y-exponent is 0, while x^3*y maps to x
        CHECK(u_op(P("x^3", cfg)).is_zero());
        CHECK(u_op(P("x^3*y", cfg)) == P("x", cfg));
        CHECK(u_op(P("x^2", cfg)).is_zero());
        CHECK(u_op(P("x*y", cfg)) == P("1", cfg));
        // x^3*y survives (both exponents odd) and maps to x; the lone x
        // term is dropped because its y-exponent is even.
        CHECK(u_op(P("x^3*y+x", cfg)) == P("x", cfg));
        auto c3 = tutil::ring_xyz(3, 1);
        CHECK(u_op(P("x^2*y^2*z^2", c3)) == P("1", c3));
        CHECK(u_op(P("x^5*y^2*z^2", c3)) == P("x", c3));
        CHECK(u_op(P("x^2*y^2*z", c3)).is_zero());
    }

    TEST_CASE("matches the reference digit rule on random input") {
        std::mt19937_64 rng(tutil::kSeedA);
        for (auto [p, W] : kRings) {
            auto cfg = tutil::ring_xyz(p, W);
            for (int i = 0; i < 200; ++i) {
                auto a = tutil::rand_poly(rng, cfg, 6, 8);
                CHECK(oracle::from_modpoly(u_op(a)) ==
                      oracle::u_op(oracle::from_modpoly(a), p));
            }
        }
    }

    TEST_CASE("digit decomposition reconstructs the input") {
        // seed logged: kSeedB with per-ring offsets; >= 1000 cases total
        std::mt19937_64 rng(tutil::kSeedB);
        std::size_t cases = 0;
        for (auto [p, W] : kRings) {
            auto cfg = tutil::ring_xyz(p, W);
            for (int i = 0; i < 210; ++i) {
                auto a = tutil::rand_poly(rng, cfg, 6, 9);
                auto digits = digit_decompose(a);
                ModPoly sum(cfg, a.prec());
                for (const auto& [r, cr] : digits) {
                    CHECK(r.all_le(static_cast<std::uint32_t>(p - 1)));
                    CHECK(!cr.is_zero());
                    sum = sum + cr.frobenius_lift().shifted(r);
                }
                CHECK(sum == a);
                ++cases;
            }
        }
        CHECK(cases >= 1000);
    }

    TEST_CASE("u is the top digit of the decomposition") {
        std::mt19937_64 rng(tutil::kSeedB ^ 0x77);
        auto cfg = tutil::ring_xy(3, 2);
        ExponentVector top(std::vector<std::uint32_t>{2, 2});
        for (int i = 0; i < 300; ++i) {
            auto a = tutil::rand_poly(rng, cfg, 6, 7);
            auto digits = digit_decompose(a);
            auto it = digits.find(top);
            if (it == digits.end())
                CHECK(u_op(a).is_zero());
            else
                CHECK(u_op(a) == it->second);
        }
    }

    TEST_CASE("twisted linearity over the Frobenius lift") {
        // seed logged: kSeedC; >= 1000 cases total
        std::mt19937_64 rng(tutil::kSeedC);
        std::size_t cases = 0;
        for (auto [p, W] : kRings) {
            auto cfg = tutil::ring_xyz(p, W);
            for (int i = 0; i < 210; ++i) {
                auto a = tutil::rand_poly(rng, cfg, 4, 3);
                auto b = tutil::rand_poly(rng, cfg, 4, 6);
                CHECK(u_op(a.frobenius_lift() * b) == a * u_op(b));
                ++cases;
            }
        }
        CHECK(cases >= 1000);
    }

    TEST_CASE("u is additive") {
        std::mt19937_64 rng(tutil::kSeedC ^ 0x99);
        auto cfg = tutil::ring_xyz(2, 3);
        for (int i = 0; i < 300; ++i) {
            auto a = tutil::rand_poly(rng, cfg, 5, 6);
            auto b = tutil::rand_poly(rng, cfg, 5, 6);
            CHECK(u_op(a + b) == u_op(a) + u_op(b));
        }
    }

    TEST_CASE("iterate composes") {
        auto cfg = tutil::ring_xy(2, 2);
        auto a = P("x^7*y^3+2*x^3*y+x", cfg);
        CHECK(u_iter(a, 0) == a);
        CHECK(u_iter(a, 1) == u_op(a));
        CHECK(u_iter(a, 2) == u_op(u_op(a)));
        CHECK(u_iter(a, 3) == u_op(u_op(u_op(a))));
    }

    TEST_CASE("first p-derivation on constants") {
        auto cfg = tutil::ring_xy(2, 3);
        // delta1(3) = (3 - 9)/2 = -3 == 1 mod 4
        CHECK(delta1(P("3", cfg)) ==
              ModPoly::constant(cfg, 2, 1));
        CHECK(delta1(P("x", cfg)).is_zero());
        CHECK(delta1(ModPoly(cfg, 3)).is_zero());
    }

    TEST_CASE("first p-derivation laws hold one digit down") {
        // seed logged: kSeedA ^ 0xd1; >= 1000 cases total
        std::mt19937_64 rng(tutil::kSeedA ^ 0xd1);
        std::size_t cases = 0;
        for (auto [p, W] : std::vector<std::pair<std::uint64_t, unsigned>>{
                 {2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
            auto cfg = tutil::ring_xyz(p, W);
            for (int i = 0; i < 210; ++i) {
                auto a = tutil::rand_poly(rng, cfg, 4, 3);
                auto b = tutil::rand_poly(rng, cfg, 4, 3);
                auto da = delta1(a);
                CHECK(da.prec() == a.prec() - 1);
                // p * delta1(a) + a^p == phi(a), one digit down
                unsigned s = W - 1;
                auto lhs = da.scale(p) + a.pow(p).reduce_precision(s);
                CHECK(lhs == a.frobenius_lift().reduce_precision(s));
                // product rule
                auto db = delta1(b);
                auto dab = delta1(a * b);
                auto rhs = a.pow(p).reduce_precision(s) * db +
                           b.pow(p).reduce_precision(s) * da +
                           (da * db).scale(p);
                CHECK(dab == rhs);
                ++cases;
            }
        }
        CHECK(cases >= 1000);
    }

    TEST_CASE("first p-derivation needs two digits") {
        auto cfg = tutil::ring_xy(2, 1);
        CHECK_THROWS_AS(delta1(P("x+1", cfg)), precision_error);
    }
}
