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

#include "polyinj/local.hpp"

#include <cmath>

#include "polyinj/error.hpp"

namespace polyinj {

namespace {

void require_xy(const MultiPoly& f) {
    if (f.uses(Var::z) || f.uses(Var::w)) throw Error(ErrorCode::arity, "local collisions need a polynomial in x, y");
}

/* Coefficients (low degree first) of y -> f(x, y) - c. */
std::vector<Rational> slice_at(const MultiPoly& f, const Rational& x, const Rational& c) {
    std::vector<Rational> g(f.degree_in(Var::y) + 1);
    std::vector<Rational> xpow(f.degree_in(Var::x) + 1, Rational(1));
    for (std::size_t i = 1; i < xpow.size(); ++i) xpow[i] = xpow[i - 1] * x;
    for (const auto& [e, coef] : f.terms()) g[e[1]] += coef * xpow[e[0]];
    g[0] -= c;
    return g;
}

Rational horner(const std::vector<Rational>& g, const Rational& t) {
    Rational acc;
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::vector<Rational> derivative(const std::vector<Rational>& g) {
    std::vector<Rational> d;
    for (std::size_t j = 1; j < g.size(); ++j) d.push_back(g[j] * Rational(static_cast<long>(j)));
    if (d.empty()) d.emplace_back(0);
    return d;
}

double horner(const std::vector<double>& g, double t) {
    double acc = 0.0;
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rational two_pow(unsigned j) {
    Integer v = 1;
    v <<= j;
    return Rational(v);
}

}  // namespace

RealPoint real_collision(const MultiPoly& f, const Rational& x0, const Rational& y0, const RealOptions& options) {
    require_xy(f);
    if (f.is_constant()) throw Error(ErrorCode::precondition, "f is constant");
    if (options.delta.is_zero()) throw Error(ErrorCode::precondition, "delta must be nonzero");
    if (!(options.tol >= 0.0)) throw Error(ErrorCode::precondition, "tolerance must be nonnegative");
    const std::array<Rational, kMaxVars> base{x0, y0, Rational(), Rational()};
    if (eval_at(partial(f, Var::y), base).is_zero())
        throw Error(ErrorCode::precondition, "df/dy vanishes at the base point");

    RealPoint out;
    out.delta = options.delta;
    out.target = eval_at(f, base);
    out.x = x0 + options.delta;

    const auto g = slice_at(f, out.x, out.target);
    const auto dg = derivative(g);
    auto sign_at = [&](const Rational& t) { return horner(g, t).sign(); };
    auto residual_of = [&](double y) { return abs(horner(g, from_double(y))).to_double(); };

    const int s0 = sign_at(y0);
    if (s0 == 0) {
        out.y = y0.to_double();
        out.residual = residual_of(out.y);
        if (out.residual <= options.tol) return out;
    }

    // expanding bracket, the Newton-suggested side first
    const Rational slope = horner(dg, y0);
    const bool up_first = slope.is_zero() || (horner(g, y0) / slope).sign() < 0;
    std::optional<std::pair<Rational, Rational>> bracket;
    for (unsigned j = 0; j <= 32 && !bracket; ++j) {
        const Rational r = two_pow(j);
        for (int side = 0; side < 2 && !bracket; ++side) {
            const bool up = (side == 0) == up_first;
            const Rational end = up ? y0 + r : y0 - r;
            const int se = sign_at(end);
            if (se == 0 || se != s0) bracket = up ? std::make_pair(y0, end) : std::make_pair(end, y0);
        }
    }
    if (!bracket) throw Error(ErrorCode::no_collision_found, "no sign change within 2^32 of y0; move the base point");

    auto [lo, hi] = *bracket;
    const int slo = sign_at(lo);
    auto bisect_to = [&](const Rational& width) {
        while (hi - lo > width) {
            const Rational mid = (lo + hi) / Rational(2);
            const int sm = sign_at(mid);
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            (sm == slo ? lo : hi) = mid;
        }
    };
    bisect_to(Rational::canonicalize(1, 10000));

    std::vector<double> gd, dgd;
    for (const auto& c : g) gd.push_back(c.to_double());
    for (const auto& c : dg) dgd.push_back(c.to_double());

    double y = ((lo + hi) / Rational(2)).to_double();
    double best_y = y, best = residual_of(y);
    for (int round = 0; round < 2 && best > options.tol; ++round) {
        for (unsigned step = 0; step < 100 && best > options.tol; ++step) {
            const double d = horner(dgd, y);
            double next = d != 0.0 ? y - horner(gd, y) / d : y;
            if (!std::isfinite(next) || next < lo.to_double() || next > hi.to_double()) break;
            if (next == y) {
                // double evaluation stalled; take one exact Newton step
                const Rational ry = from_double(y), dy = horner(dg, ry);
                if (dy.is_zero()) break;
                next = (ry - horner(g, ry) / dy).to_double();
                if (next == y) break;
            }
            y = next;
            ++out.newton_steps;
            const double r = residual_of(y);
            if (r < best) {
                best = r;
                best_y = y;
            }
        }
        if (best > options.tol) {
            // Newton left the bracket or stalled: tighten and retry once
            bisect_to(Rational::canonicalize(1, Integer(1) << 40));
            y = ((lo + hi) / Rational(2)).to_double();
        }
    }
    for (double cand : {std::nextafter(best_y, -INFINITY), std::nextafter(best_y, INFINITY)}) {
        if (best <= options.tol) break;
        const double r = residual_of(cand);
        if (r < best) {
            best = r;
            best_y = cand;
        }
    }
    out.y = best_y;
    out.residual = best;
    if (best > options.tol)
        throw Error(ErrorCode::no_collision_found, "residual " + std::to_string(best) + " above tolerance");
    return out;
}

int valuation(const Integer& v, const Integer& p) {
    if (v == 0) return kInfiniteValuation;
    Integer rest = v;
    int k = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++k;
    }
    return k;
}

namespace {

Integer mod_floor(const Integer& v, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer balanced(const Integer& v, const Integer& m) {
    Integer r = mod_floor(v, m);
    if (2 * r > m) r -= m;
    return r;
}

/* r mod m for a rational whose denominator is a unit mod m. */
Integer reduce(const Rational& r, const Integer& m) {
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), r.den().get_mpz_t(), m.get_mpz_t()))
        throw Error(ErrorCode::precondition, "coefficient " + r.str() + " is not p-integral");
    return mod_floor(r.num() * inv, m);
}

int rational_valuation(const Rational& r, const Integer& p) {
    if (r.is_zero()) return kInfiniteValuation;
    return valuation(r.num(), p) - valuation(r.den(), p);
}

}  // namespace

PadicApprox padic_collision(const MultiPoly& f, std::uint64_t p_word, unsigned precision, const Integer& x0,
                            const Integer& y0, std::optional<Integer> delta) {
    require_xy(f);
    const Integer p(std::to_string(p_word));
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw Error(ErrorCode::precondition, "p must be prime");
    if (precision == 0) throw Error(ErrorCode::precondition, "precision must be positive");
    for (const auto& [e, c] : f.terms())
        if (mpz_divisible_p(c.den().get_mpz_t(), p.get_mpz_t()))
            throw Error(ErrorCode::precondition, "coefficient " + c.str() + " is not p-integral");

    Integer modulus;
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), precision);

    PadicApprox out;
    out.p = p;
    out.precision = precision;
    out.delta = delta.value_or(p);
    out.target = eval_at(f, {Rational(x0), Rational(y0), Rational(), Rational()});
    const Rational x1(Integer(x0 + out.delta));
    out.x = balanced(x0 + out.delta, modulus);

    const auto g = slice_at(f, x1, out.target);
    const auto dg = derivative(g);

    bool found = false;
    for (Integer s = 0; s < p && !found; ++s) {
        const Rational rs(s);
        if (reduce(horner(g, rs), p) == 0 && reduce(horner(dg, rs), p) != 0) {
            out.seed = s;
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorCode::hensel_inapplicable,
                    "no simple root of f(x0 + delta, y) - c modulo p; try another delta or p");

    Integer y = out.seed;
    int v = rational_valuation(horner(g, Rational(y)), p);
    out.iteration_valuations.push_back(v);
    for (unsigned step = 0; v < static_cast<int>(precision) && step < 64; ++step) {
        const Rational ry(y);
        Integer inv;
        mpz_invert(inv.get_mpz_t(), reduce(horner(dg, ry), modulus).get_mpz_t(), modulus.get_mpz_t());
        y = balanced(y - reduce(horner(g, ry), modulus) * inv, modulus);
        v = rational_valuation(horner(g, Rational(y)), p);
        out.iteration_valuations.push_back(v);
    }
    out.y = y;
    out.residual_valuation = v;
    out.distinct_mod_pk = mod_floor(out.x - x0, modulus) != 0 || mod_floor(y - y0, modulus) != 0;
    return out;
}

}  // namespace polyinj
