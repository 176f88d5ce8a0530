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

#ifndef POLYINJ_EVAL_KERNEL_HPP
#define POLYINJ_EVAL_KERNEL_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polyinj/fingerprint.hpp"
#include "polyinj/poly.hpp"
#include "polyinj/rational.hpp"

namespace polyinj {

/*
 * A polynomial in (x, y) compiled for repeated evaluation.
 *
 * With x = a/b, y = c/d, L the common denominator of the coefficients and
 * n_ij = L * coef_ij, the value is
 *
 *   sum_ij n_ij a^i b^(Dx-i) c^j d^(Dy-j)  /  (L b^Dx d^Dy)
 *
 * so exact evaluation is integer-only until the final division, and the
 * same numerator can be computed modulo a word prime.
 */
class PairEvaluator {
   public:
    /* Throws ErrorCode::arity if p uses z or w. */
    explicit PairEvaluator(const MultiPoly& p);

    Rational exact(const Rational& x, const Rational& y) const;

    std::uint32_t degree_x() const noexcept { return dx_; }
    std::uint32_t degree_y() const noexcept { return dy_; }
    const Integer& common_denominator() const noexcept { return common_den_; }

    struct Row {
        std::uint32_t y_exp;
        std::vector<std::pair<std::uint32_t, Integer>> x_terms;  // (x exponent, n_ij)
    };
    const std::vector<Row>& rows() const noexcept { return rows_; }

   private:
    std::uint32_t dx_ = 0, dy_ = 0;
    Integer common_den_{1};
    std::vector<Row> rows_;
};

/*
 * Residues of f(values[i], values[j]) modulo one prime q for all index pairs,
 * from per-value power tables. Values whose denominator q divides (or all
 * values, when q divides the coefficient denominator) report
 * kUndefinedResidue from residue() and must be fingerprinted from the exact
 * value instead.
 */
class ModularTable {
   public:
    ModularTable(const PairEvaluator& f, std::span<const Rational> values, std::uint64_t q);

    std::uint64_t prime() const noexcept { return q_; }

    /* Residue of f(values[ix], values[iy]), or kUndefinedResidue if the fast path cannot decide. */
    std::uint64_t residue(std::size_t ix, std::size_t iy) const noexcept;

   private:
    std::uint64_t q_;
    bool usable_ = true;
    std::size_t rows_ = 0;
    std::vector<std::uint64_t> inner_;   // [ix * rows + r] = sum_i n_ij a^i b^(Dx-i) * inv(L b^Dx)
    std::vector<std::uint64_t> outer_;   // [iy * rows + r] = c^j d^(Dy-j) * inv(d^Dy)
    std::vector<std::uint8_t> x_ok_, y_ok_;
};

/* Fingerprint residue of f(values[ix], values[iy]) under table.prime(), exact fallback included. */
std::uint64_t pair_residue(const ModularTable& table, const PairEvaluator& f, std::span<const Rational> values,
                           std::size_t ix, std::size_t iy);

}  // namespace polyinj

#endif
