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


/* Acceptance suite. One line per criterion: PASS/FAIL, elapsed time and budget. */

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <unistd.h>

#include "polyinj/binary_form.hpp"
#include "polyinj/collide.hpp"
#include "polyinj/error.hpp"
#include "polyinj/expr.hpp"
#include "polyinj/ffield.hpp"
#include "polyinj/json_io.hpp"
#include "polyinj/local.hpp"
#include "polyinj/pipeline.hpp"
#include "polyinj/surface.hpp"
#include "support.hpp"

using namespace polyinj;
namespace fs = std::filesystem;
using testing::q;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && elapsed > budget_s) {
        out.ok = false;
        out.detail = "over the time budget";
    }
    if (!out.ok) ++failures;
    std::printf("%s %2d  %-44s %8.2fs / %gs%s%s\n", out.ok ? "PASS" : "FAIL", id, title, elapsed, budget_s,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

ProjPoint pt(long x, long y, long z, long w) { return ProjPoint({Integer(x), Integer(y), Integer(z), Integer(w)}); }

Json comparable(const CollisionReport& r) {
    Json j = to_json(r);
    j.erase("checkpoint");
    return j;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (const char* text : {"x + y", "x*y", "x^2 + y^2", "x^3 + y^3", "x^7 + 3*y^7", "x^2"}) {
        const MultiPoly f = parse_poly(text);
        std::vector<SearchSpace> spaces;
        for (std::uint64_t h : {1, 2, 3, 5, 10, 20, 40}) spaces.push_back({InputMode::integers, h});
        for (std::uint64_t h : {1, 2, 3, 5, 8}) spaces.push_back({InputMode::rationals, h});
        for (const auto& space : spaces) {
            const auto fast = find_collisions(f, space);
            const auto slow = naive_collisions(f, space);
            o.require(fast.collisions == slow.collisions,
                      std::string(text) + " differs at " + std::string(to_string(space.mode)) + " H=" +
                          std::to_string(space.height_bound));
        }
    }
    return o;
}

Outcome taxicab() {
    Outcome o;
    const BinaryForm form = BinaryForm::from_poly(parse_poly("x^3 + y^3"));
    const PointSet s = scan_surface(form, 12);
    const std::set<ProjPoint> exceptional(s.exceptional.begin(), s.exceptional.end());
    o.require(exceptional.count(pt(1, 12, 9, 10)) == 1, "(1:12:9:10) missing");
    o.require(exceptional.count(pt(9, 10, 1, 12)) == 1, "(9:10:1:12) missing");

    std::set<ProjPoint> diagonal;
    for (long x = -12; x <= 12; ++x)
        for (long y = -12; y <= 12; ++y)
            if ((x || y) && std::gcd(x, y) == 1) diagonal.insert(pt(x, y, x, y));
    o.require(std::set<ProjPoint>(s.trivial.begin(), s.trivial.end()) == diagonal, "trivial set is not the diagonal");

    std::set<ProjPoint> brute;
    for (const auto& p : testing::brute_surface(form, 12))
        if (!diagonal.count(p)) brute.insert(p);
    o.require(brute == exceptional, "exceptional set differs from the quadruple loop");

    // positive solutions that are not a reordering of the same pair
    std::set<ProjPoint> positive;
    for (const auto& p : s.exceptional) {
        if (p[0] <= 0 || p[1] <= 0 || p[2] <= 0 || p[3] <= 0) continue;
        if (p[0] == p[3] && p[1] == p[2]) continue;
        positive.insert(p);
    }
    std::set<ProjPoint> orbit;
    for (auto [a, b] : {std::pair{1L, 12L}, std::pair{12L, 1L}})
        for (auto [c, d] : {std::pair{9L, 10L}, std::pair{10L, 9L}}) {
            orbit.insert(pt(a, b, c, d));
            orbit.insert(pt(c, d, a, b));
        }
    o.require(positive == orbit, "positive exceptional points other than the 1729 orbit");
    o.detail = std::to_string(s.exceptional.size()) + " exceptional, " + std::to_string(positive.size()) +
               " positive non-symmetric";
    return o;
}

Outcome seventh_power_scan() {
    Outcome o;
    const MultiPoly f = parse_poly("x^7 + 3*y^7");
    const SearchSpace space{InputMode::integers, 100};
    const auto straight = find_collisions(f, space, {.shards = 16});
    o.require(straight.complete && straight.collisions.empty(), "collisions reported");

    const fs::path ckpt = fs::temp_directory_path() / ("polyinj-accept-" + std::to_string(::getpid()) + ".json");
    fs::remove(ckpt);
    const auto partial =
        find_collisions(f, space, {.shards = 16, .checkpoint = ckpt, .resume = false, .stop_after_shards = 7});
    o.require(!partial.complete, "interrupted run claims completion");
    const auto resumed = find_collisions(f, space, {.shards = 16, .checkpoint = ckpt, .resume = true});
    fs::remove(ckpt);
    o.require(resumed.complete, "resumed run incomplete");
    o.require(dump(comparable(resumed)) == dump(comparable(straight)), "resumed report differs");
    return o;
}

Outcome pipeline_shape() {
    Outcome o;
    const BinaryForm form = BinaryForm::from_poly(parse_poly("x^5 + 3*y^5"));
    BuildConfig config;
    config.height_bound = 30;
    config.rng_seed = 1;
    const ConstructionTrace first = build_injection(form, config);
    const ConstructionTrace second = build_injection(form, config);
    o.require(dump(to_json(first)) == dump(to_json(second)), "traces differ");
    o.require(first.f_poly.total_degree() == 125, "f has total degree " + std::to_string(first.f_poly.total_degree()));
    const auto report = find_collisions(first.f_poly, {InputMode::integers, 10});
    o.require(report.collisions.empty(), "collisions of f at integer H=10");
    return o;
}

Outcome trivial_lines() {
    Outcome o;
    SeededRng rng(5);
    for (int k = 0; k < 100; ++k) {
        const std::uint64_t d = static_cast<std::uint64_t>(rng.uniform(2, 7));
        const BinaryForm F = testing::random_form(rng, d, 20);
        for (int j = 0; j < 100; ++j) {
            const Rational x = testing::random_rational(rng, 1000), y = testing::random_rational(rng, 1000);
            o.require(F(x, y) == F(x, y), "diagonal");
            if (d % 2 == 0) o.require(F(x, y) == F(-x, -y), "antidiagonal");
            if (x.is_zero() && y.is_zero()) continue;
            // the same points in integer projective coordinates, through the library classifier
            const Integer X = x.num() * y.den(), Y = y.num() * x.den();
            o.require(is_trivial_point(ProjPoint({X, Y, X, Y}), d).has_value(), "diagonal point not trivial");
            if (d % 2 == 0)
                o.require(is_trivial_point(ProjPoint({X, Y, Integer(-X), Integer(-Y)}), d).has_value(),
                          "antidiagonal point not trivial");
        }
    }
    return o;
}

Outcome pth_power_injective() {
    Outcome o;
    SeededRng rng(6);
    for (int k = 0; k < 10000; ++k) {
        Rational s, t;
        do {
            s = testing::random_rational(rng, 10000);
            t = testing::random_rational(rng, 10000);
        } while (s == t);
        Rational a;
        do a = testing::random_rational(rng, 100);
        while (a.is_zero());
        const Rational b = testing::random_rational(rng, 100);
        o.require(a * pow(s, 5) + b != a * pow(t, 5) + b, "collision at " + s.str() + ", " + t.str());
    }
    return o;
}

Outcome real_demo() {
    Outcome o;
    const RealPoint r = real_collision(parse_poly("x^7 + 3*y^7"), 1, 1, {.tol = 1e-12});
    o.require(r.residual <= 1e-12, "residual " + std::to_string(r.residual));
    o.require(r.x != 1, "x unchanged");
    return o;
}

Outcome padic_demo() {
    Outcome o;
    const PadicApprox a = padic_collision(parse_poly("x^3 + y^3"), 5, 8, 1, 1, Integer(5));
    o.require(a.residual_valuation >= 8, "residual valuation " + std::to_string(a.residual_valuation));
    for (std::size_t i = 1; i < a.iteration_valuations.size(); ++i)
        o.require(a.iteration_valuations[i] >= a.iteration_valuations[i - 1], "valuations decrease");
    o.require(a.distinct_mod_pk, "lift equals the base point mod p^k");
    return o;
}

Outcome function_field() {
    Outcome o;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const ff::SearchReport r = ff::collision_search(p, 3, 10000, 40 + p);
        o.require(r.collisions == 0, "collision for p=" + std::to_string(p));
        SeededRng rng(900 + p);
        const ff::FpRatFun t = ff::FpRatFun::t(p);
        for (int k = 0; k < 1000; ++k) {
            ff::FpRatFun g = ff::random_ratfun(p, 3, rng);
            if (g.is_zero()) g = t;
            o.require(ff::is_pth_power(ff::frobenius(g)), "g^p not recognized");
            o.require(!ff::is_pth_power(ff::frobenius(g) * t), "g^p t taken for a p-th power");
        }
    }
    return o;
}

Outcome separability() {
    Outcome o;
    SeededRng rng(9);
    int squareful = 0;
    for (int k = 0; k < 1000; ++k) {
        BinaryForm F = testing::random_form(rng, static_cast<std::uint64_t>(rng.uniform(0, 6)), 6);
        if (k % 4 == 0) {
            const BinaryForm L = testing::random_form(rng, static_cast<std::uint64_t>(rng.uniform(1, 2)), 4);
            const BinaryForm R = testing::random_form(rng, static_cast<std::uint64_t>(rng.uniform(0, 2)), 4);
            F = BinaryForm::from_poly(L.to_poly() * L.to_poly() * R.to_poly());
            o.require(!is_separable(F), "squareful form reported separable");
            ++squareful;
        }
        o.require(is_separable(F) == testing::separable_by_resultant(F), "disagreement on " + render(F.to_poly()));
    }
    o.detail = std::to_string(squareful) + " squareful";
    return o;
}

Outcome parser_round_trip() {
    Outcome o;
    SeededRng rng(10);
    for (int k = 0; k < 10000; ++k) {
        const MultiPoly p = testing::random_poly(rng, testing::random_vars(rng), static_cast<int>(rng.uniform(0, 6)), 6, 100);
        o.require(parse_poly(render(p)) == p, "round trip failed for " + render(p));
    }
    static const std::vector<std::string> poison{"$", "#", "@", "x^", "((", ")", "+", "*", "^^", "3/0", "1.5", "q"};
    for (int k = 0; k < 10000; ++k) {
        std::string text = render(testing::random_poly(rng, testing::random_vars(rng), 3, 4, 20));
        const std::string& bad = poison[static_cast<std::size_t>(rng.uniform(0, poison.size() - 1))];
        if (bad == "$" || bad == "#" || bad == "@" || bad == "q" || bad == "1.5")
            text.insert(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(text.size()))), bad);
        else if (bad == "((")
            text = bad + text;
        else if (bad == ")")
            text += bad;
        else if (bad == "3/0")
            text += " + " + bad;
        else
            text += bad;  // dangling operator
        try {
            parse_poly(text);
            o.require(false, "accepted malformed \"" + text + "\"");
        } catch (const ParseError& e) {
            o.require(e.offset() <= text.size(), "offset past the end");
        } catch (const Error&) {
        }
    }
    return o;
}

}  // namespace

int main() {
    criterion(1, "collision engine equals the all-pairs oracle", 60, oracle_equivalence);
    criterion(2, "taxicab points of x^3 + y^3 at height 12", 5, taxicab);
    criterion(3, "x^7 + 3y^7 integer scan, kill and resume", 600, seventh_power_scan);
    criterion(4, "construction determinism and degree", 300, pipeline_shape);
    criterion(5, "trivial lines lie on the surface", 10, trivial_lines);
    criterion(6, "a s^5 + b is injective on rationals", 5, pth_power_injective);
    criterion(7, "real second point on x^7 + 3y^7", 1, real_demo);
    criterion(7, "5-adic second point on x^3 + y^3", 1, padic_demo);
    criterion(8, "x^p + t y^p over F_p(t)", 30, function_field);
    criterion(9, "separability against the resultant", 10, separability);
    criterion(10, "parser round trip and malformed input", 10, parser_round_trip);
    std::printf("%d failed\n", failures);
    return failures ? 1 : 0;
}
