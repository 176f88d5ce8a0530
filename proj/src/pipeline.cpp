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

#include "polyinj/pipeline.hpp"

#include <algorithm>
#include <optional>

#include "polyinj/error.hpp"
#include "polyinj/random.hpp"

namespace polyinj {

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

/* c * x^p (+ offset) in one variable */
MultiPoly power_term(Var v, const Rational& c, std::uint64_t p) {
    MultiPoly m({v});
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(p);
    m.add_term(e, c);
    return m;
}

MultiPoly binomial(const Rational& cx, const Rational& cy, std::uint64_t p) {
    return power_term(Var::x, cx, p) + power_term(Var::y, cy, p);
}

}  // namespace

std::uint64_t choose_prime(std::uint64_t w) {
    if (w < 2 || w % 2 != 0) throw Error(ErrorCode::precondition, "root-of-unity count must be even and at least 2");
    for (std::uint64_t p = 5;; ++p)
        if (is_prime(p) && w % p != 0) return p;
}

BinaryForm twist(const BinaryForm& form, const Matrix2& m, std::uint64_t p) {
    if (m.det().is_zero()) throw Error(ErrorCode::singular_matrix, "twist matrix is singular");
    const Substitution sigma{{Var::x, binomial(m.a, m.b, p)}, {Var::y, binomial(m.c, m.d, p)}};
    return BinaryForm::from_poly(substitute(form.to_poly(), sigma));
}

MultiPoly make_G(const BinaryForm& form, std::uint64_t p) {
    const Substitution sigma{{Var::x, power_term(Var::x, 1, p) + MultiPoly::constant(1)},
                             {Var::y, power_term(Var::y, 1, p) + MultiPoly::constant(1)}};
    return substitute(form.to_poly(), sigma).with_vars({Var::x, Var::y});
}

MultiPoly make_f(const MultiPoly& g, const Rational& a, const Rational& b, std::uint64_t p) {
    if (a.is_zero()) throw Error(ErrorCode::domain, "a must be nonzero for t -> a t^p + b to be injective");
    const Substitution sigma{{Var::x, power_term(Var::x, a, p) + MultiPoly::constant(b)},
                             {Var::y, power_term(Var::y, a, p) + MultiPoly::constant(b)}};
    return substitute(g.with_vars(merge_vars(g.vars(), {Var::x, Var::y})), sigma).with_vars({Var::x, Var::y});
}

bool has_rational_preimage(const ProjPoint& point, const Matrix2& m, std::uint64_t p) {
    // (x^p, y^p) is proportional to adj(M) (X, Y); same factor for (z^p, w^p) and (Z, W)
    const Rational X(point[0]), Y(point[1]), Z(point[2]), W(point[3]);
    const std::array<Rational, 4> u{m.d * X - m.b * Y, m.a * Y - m.c * X, m.d * Z - m.b * W, m.a * W - m.c * Z};
    std::optional<Rational> base;
    for (const auto& ui : u) {
        if (ui.is_zero()) continue;
        if (!base) {
            base = ui;
            continue;
        }
        if (!is_perfect_power(ui / *base, p)) return false;
    }
    return true;
}

BuildConfig config_of(const ConstructionTrace& trace) {
    BuildConfig c;
    c.height_bound = trace.height_bound;
    c.max_twists = trace.max_twists;
    c.rng_seed = trace.rng_seed;
    c.w = trace.w;
    c.max_draws = trace.max_draws;
    return c;
}

ConstructionTrace build_injection(const BinaryForm& form, const BuildConfig& config) {
    if (config.height_bound == 0) throw Error(ErrorCode::precondition, "height bound must be positive");
    const std::uint64_t p = choose_prime(config.w);
    const auto h = static_cast<std::int64_t>(config.height_bound);
    SeededRng rng(config.rng_seed);
    const ScanOptions scan_options{config.threads};

    PointSet base_scan = scan_surface(form, config.height_bound, scan_options);
    BinaryForm current = form;
    const PointSet* current_scan = &base_scan;
    std::vector<TwistStep> twists;
    bool stuck = false;

    while (!current_scan->exceptional.empty() && twists.size() < config.max_twists && !stuck) {
        std::vector<MatrixDraw> draws;
        std::optional<Matrix2> chosen;
        std::vector<PreimageCheck> checks;
        for (std::uint64_t attempt = 0; attempt < config.max_draws && !chosen; ++attempt) {
            Matrix2 m;
            m.a = rng.uniform(-h, h);
            m.b = rng.uniform(-h, h);
            m.c = rng.uniform(-h, h);
            m.d = rng.uniform(-h, h);
            if (m.det().is_zero()) {
                draws.push_back({m, "singular"});
                continue;
            }
            std::vector<PreimageCheck> attempt_checks;
            bool lifts = false;
            for (const auto& pt : current_scan->exceptional) {
                const bool pre = has_rational_preimage(pt, m, p);
                lifts = lifts || pre;
                attempt_checks.push_back({pt, pre});
            }
            draws.push_back({m, lifts ? "lifts_exceptional_point" : "accepted"});
            if (!lifts) {
                chosen = m;
                checks = std::move(attempt_checks);
            }
        }
        if (!chosen) {
            stuck = true;
            break;
        }
        current = twist(current, *chosen, p);
        twists.push_back(TwistStep{std::move(draws), *chosen, std::move(checks),
                                   scan_surface(current, config.height_bound, scan_options)});
        current_scan = &twists.back().scan;
    }
    const bool reduced = current_scan->exceptional.empty();

    MultiPoly g = make_G(current, p);
    SearchOptions search;
    search.threads = config.threads;
    std::vector<Collision> g_exceptional =
        find_collisions(g, SearchSpace{InputMode::rationals, config.height_bound}, search).collisions;

    std::vector<Rational> coords;
    for (const auto& col : g_exceptional)
        for (const auto& c : {col.first[0], col.first[1], col.second[0], col.second[1]}) coords.push_back(c);
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

    std::vector<ShiftDraw> shift_draws;
    std::optional<std::pair<Rational, Rational>> shift;
    const std::uint64_t budget = std::max<std::uint64_t>(config.max_draws, 1);
    for (std::uint64_t attempt = 0; attempt < budget && !shift; ++attempt) {
        std::int64_t a = 0;
        while (a == 0) a = rng.uniform(-h, h);
        const Rational ra(static_cast<long>(a)), rb(static_cast<long>(rng.uniform(-h, h)));
        ShiftDraw draw{ra, rb, true, {}};
        for (const auto& coord : coords)
            if (is_perfect_power((coord - rb) / ra, p)) draw.hit_coordinates.push_back(coord);
        draw.accepted = draw.hit_coordinates.empty();
        if (draw.accepted) shift.emplace(ra, rb);
        shift_draws.push_back(std::move(draw));
    }
    // budget spent: keep the last draw and say so
    const bool shift_admissible = shift.has_value();
    if (!shift) shift.emplace(shift_draws.back().a, shift_draws.back().b);

    MultiPoly f = make_f(g, shift->first, shift->second, p);
    return ConstructionTrace{form,
                             config.w,
                             p,
                             config.height_bound,
                             config.max_twists,
                             config.max_draws,
                             config.rng_seed,
                             std::move(base_scan),
                             std::move(twists),
                             current,
                             reduced,
                             std::move(g),
                             std::move(g_exceptional),
                             std::move(shift_draws),
                             shift_admissible,
                             shift->first,
                             shift->second,
                             std::move(f)};
}

}  // namespace polyinj
