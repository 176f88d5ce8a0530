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
#include "polyinj/expr.hpp"
#include "polyinj/json_io.hpp"
#include "polyinj/pipeline.hpp"
#include "support.hpp"

using namespace polyinj;
using polyinj::testing::q;

namespace {

BinaryForm form(const char* text) { return BinaryForm::from_poly(parse_poly(text)); }

const Matrix2 kIdentity{1, 0, 0, 1};

}  // namespace

TEST_CASE("prime choice") {
    CHECK(choose_prime(2) == 5);
    CHECK(choose_prime(6) == 5);
    CHECK(choose_prime(10) == 7);
    CHECK(choose_prime(70) == 11);
    CHECK_THROWS_AS(choose_prime(3), Error);
    CHECK_THROWS_AS(choose_prime(0), Error);
}

TEST_CASE("twist") {
    CHECK(twist(form("x*y"), {1, 1, 0, 1}, 5).to_poly() == parse_poly("x^5*y^5 + y^10"));
    CHECK(twist(form("x^2 + y^2"), kIdentity, 5).to_poly() == parse_poly("x^10 + y^10"));
    CHECK(twist(form("x^7 + 3*y^7"), {2, -1, 3, 4}, 5).degree() == 35);
    try {
        twist(form("x^2"), {1, 2, 2, 4}, 5);
        FAIL("singular matrix accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::singular_matrix);
    }
}

TEST_CASE("twist agrees with composition and scales degree") {
    SeededRng rng(12);
    for (std::uint64_t d : {2, 3, 5}) {
        const BinaryForm F = testing::random_form(rng, d, 5);
        Matrix2 m;
        do
            m = {rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-4, 4)};
        while (m.det().is_zero());
        const BinaryForm T = twist(F, m, 5);
        CHECK(T.degree() == d * 5);
        CHECK(homogeneity(T.to_poly()) == d * 5);
        for (int k = 0; k < 10; ++k) {
            const Rational x = testing::random_rational(rng, 6), y = testing::random_rational(rng, 6);
            const Rational xp = pow(x, 5), yp = pow(y, 5);
            CHECK(T(x, y) == F(m.a * xp + m.b * yp, m.c * xp + m.d * yp));
            // trivial lines survive the twist
            CHECK(T(-x, -y) == T(x, y) * pow(Rational(-1), T.degree()));
        }
    }
}

TEST_CASE("G and f") {
    CHECK(make_G(form("x^2"), 5) == parse_poly("x^10 + 2*x^5 + 1"));
    CHECK(eval(make_G(form("x^5 + 3*y^5"), 5), std::vector<Rational>{1, 1}) == q(128));
    CHECK(make_G(form("x*y"), 5) == parse_poly("x^5*y^5 + x^5 + y^5 + 1"));
    CHECK(make_G(form("x^3 + y^3"), 5).total_degree() == 15);

    const MultiPoly G = make_G(form("x^3 - 2*x*y^2"), 5);
    CHECK(make_f(G, 1, 0, 5) == substitute(G, {{Var::x, parse_poly("x^5")}, {Var::y, parse_poly("y^5")}}));
    CHECK(eval(make_f(parse_poly("x + y"), 1, 1, 5), std::vector<Rational>{1, 1}) == q(4));
    try {
        make_f(G, 0, 1, 5);
        FAIL("a = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::domain);
    }

    SeededRng rng(2);
    const Rational a = q(-3, 2), b = q(7);
    const MultiPoly f = make_f(G, a, b, 5);
    for (int k = 0; k < 20; ++k) {
        const Rational s = testing::random_rational(rng, 5), t = testing::random_rational(rng, 5);
        CHECK(eval_at(f, {s, t, 0, 0}) == eval_at(G, {a * pow(s, 5) + b, a * pow(t, 5) + b, 0, 0}));
    }
}

TEST_CASE("p-th power map is injective on rationals") {
    SeededRng rng(6);
    for (int k = 0; k < 2000; ++k) {
        const Rational s = testing::random_rational(rng, 1000), t = testing::random_rational(rng, 1000);
        Rational a;
        do a = testing::random_rational(rng, 50);
        while (a.is_zero());
        const Rational b = testing::random_rational(rng, 50);
        CHECK((a * pow(s, 5) + b == a * pow(t, 5) + b) == (s == t));
    }
}

TEST_CASE("rational preimages under a twist") {
    CHECK(has_rational_preimage(ProjPoint({1, 32, 243, 0}), kIdentity, 5));
    CHECK_FALSE(has_rational_preimage(ProjPoint({1, 2, 1, 2}), kIdentity, 5));
    // (x, y) = (1, 1), (z, w) = (2, 1) map to (2, 1) and (33, 1)
    CHECK(has_rational_preimage(ProjPoint({2, 1, 33, 1}), {1, 1, 0, 1}, 5));
    CHECK_FALSE(has_rational_preimage(ProjPoint({2, 1, 34, 1}), {1, 1, 0, 1}, 5));
}

TEST_CASE("build on a form without exceptional points") {
    const auto t = build_injection(form("x^5 + 3*y^5"), {.height_bound = 8, .rng_seed = 1});
    CHECK(t.p == 5);
    CHECK(t.base_scan.exceptional.empty());
    CHECK(t.twists.empty());
    CHECK(t.reduced);
    CHECK(t.final_form == t.base_form);
    CHECK(t.g_poly == make_G(t.final_form, 5));
    CHECK(t.f_poly == make_f(t.g_poly, t.a, t.b, 5));
    CHECK(t.f_poly.total_degree() == 125);
    CHECK_FALSE(t.a.is_zero());
    REQUIRE_FALSE(t.shift_draws.empty());
    CHECK(t.shift_draws.back().accepted);
    CHECK(t.shift_admissible);
}

TEST_CASE("build twists away the taxicab points") {
    const auto t = build_injection(form("x^3 + y^3"), {.height_bound = 12, .rng_seed = 3});
    CHECK_FALSE(t.base_scan.exceptional.empty());
    REQUIRE(t.twists.size() >= 1);
    BinaryForm current = t.base_form;
    for (const auto& step : t.twists) {
        CHECK_FALSE(step.matrix.det().is_zero());
        CHECK(step.draws.back().outcome == "accepted");
        CHECK(step.draws.back().matrix == step.matrix);
        current = twist(current, step.matrix, t.p);
        CHECK(step.scan.form == current);
    }
    CHECK(t.final_form == current);
    CHECK(t.reduced == t.twists.back().scan.exceptional.empty());
    CHECK(t.f_poly == make_f(make_G(t.final_form, t.p), t.a, t.b, t.p));
}

TEST_CASE("unreduced traces are flagged, not thrown") {
    const auto t = build_injection(form("x^3 + y^3"), {.height_bound = 12, .max_twists = 0, .rng_seed = 3});
    CHECK(t.twists.empty());
    CHECK_FALSE(t.reduced);
    CHECK(t.f_poly.total_degree() == 75);
    // the symmetric family of G covers every integer in the box, so no shift can dodge it
    CHECK_FALSE(t.shift_admissible);
    CHECK(t.shift_draws.size() == t.max_draws);
    CHECK(t.a == t.shift_draws.back().a);
}

TEST_CASE("shift draws avoid known collisions of G") {
    // G = (x^5+1)^2 + (y^5+1)^2 has collisions at swapped and sign-changed arguments
    const auto t = build_injection(form("x^2 + y^2"), {.height_bound = 3, .max_twists = 0, .rng_seed = 5, .max_draws = 8});
    CHECK_FALSE(t.g_exceptional.empty());
    for (const auto& draw : t.shift_draws) {
        bool hit = false;
        for (const auto& c : t.g_exceptional)
            for (const auto& v : {c.first[0], c.first[1], c.second[0], c.second[1]})
                hit = hit || is_perfect_power((v - draw.b) / draw.a, t.p);
        CHECK(hit == !draw.accepted);
        CHECK(hit == !draw.hit_coordinates.empty());
    }
    CHECK(t.shift_admissible == t.shift_draws.back().accepted);
}

TEST_CASE("same seed, same trace") {
    const BuildConfig cfg{.height_bound = 10, .rng_seed = 99};
    const auto a = build_injection(form("x^3 + y^3"), cfg);
    const auto b = build_injection(form("x^3 + y^3"), {.height_bound = 10, .rng_seed = 99, .threads = 3});
    CHECK(dump(to_json(a)) == dump(to_json(b)));
    const auto c = build_injection(form("x^3 + y^3"), config_of(a));
    CHECK(dump(to_json(a)) == dump(to_json(c)));
    const Json j = to_json(a);
    const BuildConfig back = build_config_from_json(j);
    CHECK(back.rng_seed == 99);
    CHECK(back.height_bound == 10);
    CHECK(form_from_json(j["base_form"]) == a.base_form);
    CHECK(poly_from_json(j["f_poly"]) == a.f_poly);
}
