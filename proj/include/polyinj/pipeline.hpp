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

#ifndef POLYINJ_PIPELINE_HPP
#define POLYINJ_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyinj/binary_form.hpp"
#include "polyinj/collide.hpp"
#include "polyinj/poly.hpp"
#include "polyinj/surface.hpp"

namespace polyinj {

/* Smallest prime p > 3 with p not dividing w (w = number of roots of unity in the base field). */
std::uint64_t choose_prime(std::uint64_t w);

/* [[a, b], [c, d]] */
struct Matrix2 {
    Rational a, b, c, d;

    Rational det() const { return a * d - b * c; }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/* F(a x^p + b y^p, c x^p + d y^p). Throws ErrorCode::singular_matrix. */
BinaryForm twist(const BinaryForm& form, const Matrix2& m, std::uint64_t p);

/* F(x^p + 1, y^p + 1), expanded. */
MultiPoly make_G(const BinaryForm& form, std::uint64_t p);

/* G(a x^p + b, a y^p + b), expanded. Throws ErrorCode::domain when a == 0. */
MultiPoly make_f(const MultiPoly& g, const Rational& a, const Rational& b, std::uint64_t p);

/*
 * Whether a point of the surface has a Q-rational preimage under
 * (x:y:z:w) -> (a x^p + b y^p : c x^p + d y^p : a z^p + b w^p : c z^p + d w^p).
 */
bool has_rational_preimage(const ProjPoint& point, const Matrix2& m, std::uint64_t p);

struct MatrixDraw {
    Matrix2 matrix;
    std::string outcome;  // "accepted", "singular", "lifts_exceptional_point"
};

struct PreimageCheck {
    ProjPoint point;
    bool has_rational_preimage;
};

struct TwistStep {
    std::vector<MatrixDraw> draws;               // every draw for this step; the last accepted one is `matrix`
    Matrix2 matrix;
    std::vector<PreimageCheck> preimage_checks;  // exceptional points of the form before this twist
    PointSet scan;                               // the twisted form at the height bound
};

struct ShiftDraw {
    Rational a, b;
    bool accepted;
    std::vector<Rational> hit_coordinates;  // collision coordinates inside the range of t -> a t^p + b
};

struct BuildConfig {
    std::uint64_t height_bound = 10;
    std::uint64_t max_twists = 3;
    std::uint64_t rng_seed = 0;
    std::uint64_t w = 2;
    std::uint64_t max_draws = 64;  // per twist step and for (a, b)
    unsigned threads = 0;
};

struct ConstructionTrace {
    BinaryForm base_form;
    std::uint64_t w;
    std::uint64_t p;
    std::uint64_t height_bound;
    std::uint64_t max_twists;
    std::uint64_t max_draws;
    std::uint64_t rng_seed;
    PointSet base_scan;
    std::vector<TwistStep> twists;
    BinaryForm final_form;
    bool reduced;                          // final scan has no exceptional points
    MultiPoly g_poly;
    std::vector<Collision> g_exceptional;  // rational inputs of height <= height_bound
    std::vector<ShiftDraw> shift_draws;
    bool shift_admissible;                 // false when every draw hit a collision coordinate; (a, b) is the last draw
    Rational a, b;
    MultiPoly f_poly;
};

/*
 * Twist F with random integer matrices until the bounded-height scan shows no
 * exceptional points (or max_twists is spent, leaving reduced = false), form
 * G, then draw (a, b) until no coordinate of a known exceptional collision of
 * G lies in the range of t -> a t^p + b, and form f. Every draw comes from one
 * seeded generator and is recorded. Exhausted budgets are flagged in the
 * trace (reduced, shift_admissible) rather than thrown.
 */
ConstructionTrace build_injection(const BinaryForm& form, const BuildConfig& config);

BuildConfig config_of(const ConstructionTrace& trace);

}  // namespace polyinj

#endif
