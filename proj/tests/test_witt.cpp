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

#include <random>
#include <vector>

#include "doctest.h"
#include "qfsplit/witt.hpp"
#include "test_util.hpp"

using namespace qfs::witt;
using W = Entries<cpp_int>;

TEST_SUITE("witt") {
    TEST_CASE("ghost components of small vectors") {
        CHECK(ghost(W{3, 5}, 2) == W{3, 19});  // 3, 3^2 + 2*5
        CHECK(ghost(W{1, 0, 0}, 2) == W{1, 1, 1});
        CHECK(ghost(W{0, 0, 0}, 3) == W{0, 0, 0});
        CHECK(ghost(W{2, 1, 4}, 3) == W{2, 11, 551});  // 2^9 + 3*1^3 + 9*4
    }

    TEST_CASE("ghost of a Teichmueller lift is the power tower") {
        auto t = teichmuller<cpp_int>(5, 4);
        auto g = ghost(t, 3);
        using ops = entry_ops<cpp_int>;
        CHECK(g == W{5, 125, ops::pow(5, 9), ops::pow(5, 27)});
    }

    TEST_CASE("ghost inversion micro-cases") {
        CHECK(from_ghost(W{1, 3}, 2) == W{1, 1});
        CHECK(from_ghost(W{3, 19}, 2) == W{3, 5});
        CHECK(from_ghost(W{0, 2}, 2) == W{0, 1});
        SUBCASE("non-image vectors are rejected with the failing index") {
            CHECK_THROWS_AS(from_ghost(W{0, 1}, 2), ghost_image_error);
            try {
                from_ghost(W{0, 1}, 2);
            } catch (const ghost_image_error& e) {
                CHECK(e.index() == 1);
            }
            try {
                from_ghost(W{1, 1, 2}, 2);
            } catch (const ghost_image_error& e) {
                CHECK(e.index() == 2);
            }
        }
    }

    TEST_CASE("inversion undoes ghost on random vectors") {
        std::mt19937_64 rng(tutil::kSeedA);
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            for (int i = 0; i < 200; ++i) {
                std::size_t n = 1 + rng() % 4;
                W a;
                for (std::size_t j = 0; j < n; ++j)
                    a.push_back(cpp_int(static_cast<std::int64_t>(rng() % 2001) -
                                        1000));
                CHECK(from_ghost(ghost(a, p), p) == a);
            }
        }
    }

    TEST_CASE("unit plus shifted unit") {
        // [1] + V[1] over p=2: ghost (1,1) + (0,2) = (1,3) -> (1,1)
        auto one = teichmuller<cpp_int>(1, 2);
        auto v1 = verschiebung(teichmuller<cpp_int>(1, 1));
        CHECK(witt_add(one, v1, 2) == W{1, 1});
    }

    TEST_CASE("length-2 closed forms match the ghost route") {
        std::mt19937_64 rng(tutil::kSeedB);
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            for (int i = 0; i < 200; ++i) {
                cpp_int a0 = static_cast<std::int64_t>(rng() % 201) - 100;
                cpp_int a1 = static_cast<std::int64_t>(rng() % 201) - 100;
                cpp_int b0 = static_cast<std::int64_t>(rng() % 201) - 100;
                cpp_int b1 = static_cast<std::int64_t>(rng() % 201) - 100;
                W a{a0, a1}, b{b0, b1};
                using ops = entry_ops<cpp_int>;
                cpp_int carry =
                    (ops::pow(a0, p) + ops::pow(b0, p) - ops::pow(a0 + b0, p)) /
                    p;
                CHECK(witt_add(a, b, p) == W{a0 + b0, a1 + b1 + carry});
                CHECK(witt_mul(a, b, p) ==
                      W{a0 * b0, ops::pow(a0, p) * b1 + ops::pow(b0, p) * a1 +
                                     p * a1 * b1});
            }
        }
    }

    TEST_CASE("Teichmueller lifts are multiplicative") {
        std::mt19937_64 rng(tutil::kSeedC);
        for (std::uint64_t p : {2ull, 3ull}) {
            for (int i = 0; i < 100; ++i) {
                cpp_int x = static_cast<std::int64_t>(rng() % 101) - 50;
                cpp_int y = static_cast<std::int64_t>(rng() % 101) - 50;
                std::size_t n = 1 + rng() % 4;
                CHECK(witt_mul(teichmuller(x, n), teichmuller(y, n), p) ==
                      teichmuller<cpp_int>(x * y, n));
            }
        }
    }

    TEST_CASE("shift interacts with ghost by p-scaling") {
        std::mt19937_64 rng(tutil::kSeedC ^ 0x5);
        for (int i = 0; i < 100; ++i) {
            W a;
            std::size_t n = 1 + rng() % 3;
            for (std::size_t j = 0; j < n; ++j)
                a.push_back(cpp_int(static_cast<std::int64_t>(rng() % 41) - 20));
            auto g = ghost(a, 3);
            auto gv = ghost(verschiebung(a), 3);
            REQUIRE(gv.size() == g.size() + 1);
            CHECK(gv[0] == 0);
            for (std::size_t r = 0; r < g.size(); ++r)
                CHECK(gv[r + 1] == 3 * g[r]);
        }
    }

    TEST_CASE("restriction commutes with the shift") {
        std::mt19937_64 rng(tutil::kSeedA ^ 0xabc);
        for (int i = 0; i < 100; ++i) {
            W a;
            std::size_t n = 1 + rng() % 4;
            for (std::size_t j = 0; j < n; ++j)
                a.push_back(cpp_int(static_cast<std::int64_t>(rng() % 41) - 20));
            CHECK(restriction(verschiebung(a)) == verschiebung(restriction(a)));
        }
        CHECK_THROWS_AS(restriction(W{}), qfs::error);
    }

    TEST_CASE("polynomial entries go through the same machinery") {
        IntPoly2 x;
        x.t[{1, 0}] = 1;
        IntPoly2 y;
        y.t[{0, 1}] = 1;
        Entries<IntPoly2> a{x, y};
        CHECK(from_ghost(ghost(a, 2), 2) == a);
        auto s = witt_add(a, a, 2);
        // 2*(x, y) has first entry 2x; second solves 4x^2 + 2*s1 = 2(x^2+2y)
        IntPoly2 want0 = entry_ops<IntPoly2>::scale(2, x);
        CHECK(s[0] == want0);
        IntPoly2 want1;
        want1.t[{2, 0}] = -1;
        want1.t[{0, 1}] = 2;
        CHECK(s[1] == want1);
    }

    TEST_CASE("randomized self-test batteries report zero failures") {
        for (std::uint64_t p : {2ull, 3ull}) {
            auto r1 = check_ghost_image_of_pW(p, 1, 4, 200, tutil::kSeedA);
            INFO("seed ", r1.seed, " first failure: ", r1.first_failure);
            CHECK(r1.failures == 0);
            CHECK(r1.trials == 200);

            auto r2 = check_ghost_image_of_pW(p, 2, 3, 200, tutil::kSeedB);
            INFO("seed ", r2.seed, " first failure: ", r2.first_failure);
            CHECK(r2.failures == 0);

            auto r3 = check_ghost_well_defined_mod_p(p, 4, 200, tutil::kSeedB);
            INFO("seed ", r3.seed, " first failure: ", r3.first_failure);
            CHECK(r3.failures == 0);

            auto r4 = check_ring_laws(p, 4, 200, tutil::kSeedC);
            INFO("seed ", r4.seed, " first failure: ", r4.first_failure);
            CHECK(r4.failures == 0);
        }
    }
}
