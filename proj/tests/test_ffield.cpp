/*
   Copyright 2026 The polyinj Authors

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

#include <doctest.h>

#include "polyinj/error.hpp"
#include "polyinj/ffield.hpp"
#include "polyinj/random.hpp"

using namespace polyinj;
using namespace polyinj::ff;

namespace {

FpRatFun R(std::uint32_t p, std::vector<std::uint32_t> num, std::vector<std::uint32_t> den = {1}) {
    return FpRatFun(FpPoly(p, std::move(num)), FpPoly(p, std::move(den)));
}

FpPoly random_poly(std::uint32_t p, unsigned deg, SeededRng& rng) {
    std::vector<std::uint32_t> c(deg + 1);
    for (auto& v : c) v = static_cast<std::uint32_t>(rng.uniform(0, p - 1));
    return FpPoly(p, std::move(c));
}

/* Value of g at a point of F_p, straight Horner. */
std::uint32_t at(const FpPoly& g, std::uint32_t s) {
    std::uint64_t v = 0;
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) v = (v * s + *it) % g.p();
    return static_cast<std::uint32_t>(v);
}

}  // namespace

TEST_CASE("polynomial arithmetic over F_p") {
    const FpPoly a(3, {1, 2, 0, 1}), b(3, {2, 1});
    CHECK((a + b).coeffs() == std::vector<std::uint32_t>{0, 0, 0, 1});
    CHECK(FpPoly(5, {1, 2, 0, 0}).degree() == 1);
    CHECK(FpPoly(5, {0, 0}).is_zero());
    CHECK(FpPoly(5).degree() == -1);
    CHECK(FpPoly(5, {7, 12}).coeffs() == std::vector<std::uint32_t>{2, 2});
    CHECK((-FpPoly(5, {1, 4})).coeffs() == std::vector<std::uint32_t>{4, 1});
    CHECK_THROWS_AS(divmod(a, FpPoly(3)), Error);
    CHECK(derivative(FpPoly(3, {1, 1, 1, 1})).coeffs() == std::vector<std::uint32_t>{1, 2});
    CHECK(frobenius(FpPoly(2, {1, 1})).coeffs() == std::vector<std::uint32_t>{1, 0, 1});

    for (std::uint32_t p : {2u, 3u, 5u, 7u, 65521u}) {
        SeededRng rng(p);
        for (int trial = 0; trial < 100; ++trial) {
            const FpPoly x = random_poly(p, rng.uniform(0, 8), rng), y = random_poly(p, rng.uniform(0, 8), rng);
            // ring operations agree with evaluation at field points
            for (std::uint32_t s = 0; s < std::min<std::uint32_t>(p, 7); ++s) {
                CHECK(at(x * y, s) == static_cast<std::uint64_t>(at(x, s)) * at(y, s) % p);
                CHECK(at(x + y, s) == (at(x, s) + at(y, s)) % p);
            }
            if (y.is_zero()) continue;
            const auto [quo, rem] = divmod(x, y);
            CHECK(quo * y + rem == x);
            CHECK(rem.degree() < y.degree());
            const FpPoly g = gcd(x, y);
            CHECK(g.lead() == 1);
            CHECK(divmod(x, g).second.is_zero());
            CHECK(divmod(y, g).second.is_zero());
        }
    }
}

TEST_CASE("canonical rational functions") {
    const FpRatFun h(FpPoly(5, {0, 2}), FpPoly(5, {0, 0, 3}));  // 2t / 3t^2 = 4 / t
    CHECK(h.num().coeffs() == std::vector<std::uint32_t>{4});
    CHECK(h.den().coeffs() == std::vector<std::uint32_t>{0, 1});
    CHECK(FpRatFun(FpPoly(3), FpPoly(3, {2, 1})) == FpRatFun::zero(3));
    CHECK_THROWS_AS(FpRatFun(FpPoly(3, {1}), FpPoly(3)), Error);
    CHECK_THROWS_AS(R(3, {1}) / FpRatFun::zero(3), Error);
    CHECK(R(3, {1}) / R(3, {0, 1}) * R(3, {0, 1}) == R(3, {1}));
}

TEST_CASE("evaluating x^p + t y^p") {
    CHECK(eval_injection(R(2, {1}), R(2, {1})) == R(2, {1, 1}));
    CHECK(eval_injection(R(2, {0, 1}), FpRatFun::zero(2)) == R(2, {0, 0, 1}));
    CHECK(eval_injection(R(3, {0, 1}), R(3, {1})) == R(3, {0, 1, 0, 1}));
}

TEST_CASE("p-th power test") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK_FALSE(is_pth_power(FpRatFun::t(p)));
    CHECK(is_pth_power(R(2, {0, 0, 1})));
    CHECK(is_pth_power(R(3, {1, 0, 0, 1}, {0, 0, 0, 1})));
    CHECK(is_pth_power(FpRatFun::zero(5)));
}

TEST_CASE("verification results") {
    CHECK(std::holds_alternative<EqualInputs>(verify_injection(R(2, {1}), R(2, {1}), R(2, {1}), R(2, {1}))));
    const auto r = verify_injection(R(2, {1}), R(2, {1}), R(2, {0, 1}), FpRatFun::zero(2));
    REQUIRE(std::holds_alternative<DistinctValues>(r));
    CHECK(std::get<DistinctValues>(r).difference == R(2, {1, 1, 1}));
    const auto s = verify_injection(R(3, {0, 1}), R(3, {1}), FpRatFun::zero(3), R(3, {1}));
    REQUIRE(std::holds_alternative<DistinctValues>(s));
    CHECK(std::get<DistinctValues>(s).difference == R(3, {0, 0, 0, 1}));
}

TEST_CASE("Frobenius is the p-th power") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        SeededRng rng(100 + p);
        for (int trial = 0; trial < 20; ++trial) {
            const FpPoly g = random_poly(p, rng.uniform(0, 50), rng);
            CHECK(pow(g, p) == frobenius(g));
        }
    }
}

TEST_CASE("freshman's dream") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        SeededRng rng(200 + p);
        for (int trial = 0; trial < 50; ++trial) {
            const FpRatFun u = random_ratfun(p, 4, rng), v = random_ratfun(p, 4, rng);
            CHECK(frobenius(u + v) == frobenius(u) + frobenius(v));
            FpRatFun prod = FpRatFun(FpPoly::constant(p, 1));
            for (std::uint32_t i = 0; i < p; ++i) prod = prod * (u + v);
            CHECK(prod == frobenius(u + v));
        }
    }
}

TEST_CASE("derivative criterion on a corpus") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        SeededRng rng(300 + p);
        const FpRatFun t = FpRatFun::t(p);
        for (int trial = 0; trial < 200; ++trial) {
            const FpRatFun g = random_ratfun(p, 3, rng);
            CHECK(is_pth_power(frobenius(g)));
            if (!g.is_zero()) CHECK_FALSE(is_pth_power(frobenius(g) * t));
        }
    }
}

TEST_CASE("text form") {
    const FpRatFun h = R(5, {1, 0, 3}, {2, 1});
    CHECK(to_text(h) == "1,0,3;2,1");
    CHECK(from_text(5, "1,0,3;2,1") == h);
    CHECK(to_text(FpRatFun::zero(3)) == "0;1");
    CHECK(from_text(3, "0,1") == FpRatFun::t(3));
    CHECK(from_text(3, "4") == R(3, {1}));
    for (const char* bad : {"", ";", "1;", "1;0", "a", "1,,2", "-1", "1;2;3"}) CHECK_THROWS_AS(from_text(3, bad), Error);
    SeededRng rng(5);
    for (int i = 0; i < 200; ++i) {
        const FpRatFun x = random_ratfun(7, 5, rng);
        CHECK(from_text(7, to_text(x)) == x);
    }
}

TEST_CASE("collision search") {
    const SearchReport a = collision_search(2, 3, 10000, 1);
    CHECK(a.collisions == 0);
    CHECK(a.distinct_inputs == a.distinct_values);
    CHECK(a.pairwise_checks == 9999);
    const SearchReport b = collision_search(5, 2, 1000, 2);
    CHECK(b.collisions == 0);
    CHECK(b.distinct_inputs == b.distinct_values);
    const SearchReport c = collision_search(2, 0, 500, 3);
    CHECK(c.collisions == 0);
    CHECK(c.distinct_inputs == 4);  // constants in F_2, pairs of them
    CHECK(c.distinct_values == 4);
    const SearchReport d = collision_search(7, 2, 300, 4);
    CHECK(d.collisions == 0);
    CHECK(collision_search(3, 2, 200, 9).distinct_values == collision_search(3, 2, 200, 9).distinct_values);
}
