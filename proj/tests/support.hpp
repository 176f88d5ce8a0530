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

#ifndef POLYINJ_TESTS_SUPPORT_HPP
#define POLYINJ_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "polyinj/binary_form.hpp"
#include "polyinj/collide.hpp"
#include "polyinj/poly.hpp"
#include "polyinj/random.hpp"
#include "polyinj/surface.hpp"

namespace polyinj::testing {

inline Rational q(long n, long d = 1) { return Rational::canonicalize(n, d); }

/* Random rational with |num| <= h and 1 <= den <= h. */
inline Rational random_rational(SeededRng& rng, long h) {
    return Rational::canonicalize(rng.uniform(-h, h), rng.uniform(1, h));
}

inline std::vector<Var> random_vars(SeededRng& rng, std::size_t max_vars = kMaxVars) {
    std::vector<Var> vars;
    for (std::size_t i = 0; i < max_vars; ++i)
        if (rng.uniform(0, 1)) vars.push_back(static_cast<Var>(i));
    return vars;
}

/* Up to `terms` random terms over `vars`, exponents <= max_exp. */
inline MultiPoly random_poly(SeededRng& rng, const std::vector<Var>& vars, int terms, int max_exp, long coef_h) {
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        for (Var v : vars) e[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(rng.uniform(0, max_exp));
        p.add_term(e, random_rational(rng, coef_h));
    }
    return p;
}

/* Random nonzero binary form of the given degree with integer coefficients in [-h, h]. */
inline BinaryForm random_form(SeededRng& rng, std::uint64_t degree, long h) {
    std::vector<Rational> c(degree + 1);
    do
        for (auto& v : c) v = Rational(static_cast<long>(rng.uniform(-h, h)));
    while (std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); }));
    return BinaryForm(c);
}

/* ---- independent oracles ---- */

/* Quadruple loop over the box; canonical points, sorted. Integer-coefficient forms only. */
inline std::vector<ProjPoint> brute_surface(const BinaryForm& form, long h) {
    std::vector<Integer> coeffs;
    for (const auto& c : form.coeffs()) coeffs.push_back(c.num());
    const std::size_t d = form.degree();
    auto value = [&](long x, long y) {
        Integer v = 0, xp, yp;
        for (std::size_t i = 0; i <= d; ++i) {
            mpz_pow_ui(xp.get_mpz_t(), Integer(x).get_mpz_t(), d - i);
            mpz_pow_ui(yp.get_mpz_t(), Integer(y).get_mpz_t(), i);
            v += coeffs[i] * xp * yp;
        }
        return v;
    };
    const long n = 2 * h + 1;
    std::vector<Integer> table(n * n);
    for (long x = -h; x <= h; ++x)
        for (long y = -h; y <= h; ++y) table[(x + h) * n + (y + h)] = value(x, y);
    std::vector<ProjPoint> out;
    for (long x = -h; x <= h; ++x)
        for (long y = -h; y <= h; ++y)
            for (long z = -h; z <= h; ++z)
                for (long w = -h; w <= h; ++w) {
                    if (!x && !y && !z && !w) continue;
                    const long first = x ? x : y ? y : z ? z : w;
                    if (first < 0) continue;
                    if (std::gcd(std::gcd(x, y), std::gcd(z, w)) != 1) continue;
                    if (table[(x + h) * n + (y + h)] == table[(z + h) * n + (w + h)])
                        out.emplace_back(std::array<Integer, 4>{x, y, z, w});
                }
    std::sort(out.begin(), out.end());
    return out;
}

/* Determinant by fraction-free elimination over Q. */
inline Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/* Sylvester resultant of two univariate polynomials, coefficients highest degree first. */
inline Rational sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[i];
    return determinant(s);
}

/* Squarefree iff y^2 does not divide F and the discriminant of F(x,1) is nonzero. */
inline bool separable_by_resultant(const BinaryForm& form) {
    const auto& c = form.coeffs();
    std::size_t y_mult = 0;
    while (y_mult < c.size() && c[y_mult].is_zero()) ++y_mult;
    if (y_mult > 1) return false;
    // g(x) = F(x, 1): coefficient of x^(d-i) is c[i]; drop leading zeros
    std::vector<Rational> g(c.begin() + static_cast<long>(y_mult), c.end());
    if (g.size() <= 2) return true;
    const std::size_t deg = g.size() - 1;
    std::vector<Rational> dg;
    for (std::size_t i = 0; i < deg; ++i) dg.push_back(g[i] * Rational(static_cast<long>(deg - i)));
    return !sylvester_resultant(g, dg).is_zero();
}

/* Unordered collision pairs as a set, for order-insensitive comparisons. */
inline std::set<std::pair<InputPair, InputPair>> pair_set(const std::vector<Collision>& cs) {
    std::set<std::pair<InputPair, InputPair>> out;
    for (const auto& c : cs) out.emplace(std::min(c.first, c.second), std::max(c.first, c.second));
    return out;
}

}  // namespace polyinj::testing

#endif
