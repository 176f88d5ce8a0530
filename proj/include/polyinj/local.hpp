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

#ifndef POLYINJ_LOCAL_HPP
#define POLYINJ_LOCAL_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "polyinj/poly.hpp"
#include "polyinj/rational.hpp"

namespace polyinj {

/* Smallest tolerance the double-precision real path promises to reach. */
inline constexpr double kRealTolFloor = 1e-12;

struct RealOptions {
    double tol = kRealTolFloor;
    Rational delta = Rational::canonicalize(1, 1024);
};

/* Second point on the level curve f = f(x0, y0); x is exact, y a double. */
struct RealPoint {
    Rational x;        // x0 + delta
    double y;
    double residual;   // |f(x, y) - c| evaluated exactly, y taken as its dyadic value
    Rational target;   // c = f(x0, y0)
    Rational delta;
    unsigned newton_steps = 0;
};

/*
 * Moves x by delta and solves f(x0 + delta, y) = f(x0, y0) for y: expanding
 * bracket around y0, bisection to 1e-4, then Newton until the exact residual
 * is within tol. Throws ErrorCode::precondition if f is constant or df/dy
 * vanishes at the base point, ErrorCode::no_collision_found if no bracket is
 * found or tol is not reached.
 */
RealPoint real_collision(const MultiPoly& f, const Rational& x0, const Rational& y0, const RealOptions& options = {});

/* Valuation reported for an exact zero. */
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

/* Integer p-adic valuation; kInfiniteValuation for 0. */
int valuation(const Integer& v, const Integer& p);

struct PadicApprox {
    Integer p;
    unsigned precision;       // k
    Integer x;                // x0 + delta, balanced residue mod p^k
    Integer y;                // lifted root, balanced residue mod p^k
    Integer delta;
    Integer seed;             // simple root of f(x, .) - c mod p, in [0, p)
    Rational target;          // c = f(x0, y0)
    int residual_valuation;   // v_p(f(x, y) - c), >= precision on return
    std::vector<int> iteration_valuations;  // v_p of the residual after seeding and after each Newton step
    bool distinct_mod_pk;     // (x, y) != (x0, y0) mod p^k
};

/*
 * Hensel lift of a simple root of y -> f(x0 + delta, y) - f(x0, y0) from
 * Z/p to Z/p^k. delta defaults to p. Throws ErrorCode::hensel_inapplicable if
 * no simple root mod p exists, ErrorCode::precondition if f has coefficients
 * that are not p-integral or p is not prime.
 */
PadicApprox padic_collision(const MultiPoly& f, std::uint64_t p, unsigned precision, const Integer& x0,
                            const Integer& y0, std::optional<Integer> delta = std::nullopt);

}  // namespace polyinj

#endif
