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

#include "polyinj/eval_kernel.hpp"

#include <map>

#include "polyinj/error.hpp"

namespace polyinj {

namespace {

std::vector<Integer> powers(const Integer& base, std::uint32_t n) {
    std::vector<Integer> out(n + 1);
    out[0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k) out[k] = out[k - 1] * base;
    return out;
}

std::vector<std::uint64_t> powers_mod(std::uint64_t base, std::uint32_t n, std::uint64_t q) {
    std::vector<std::uint64_t> out(n + 1);
    out[0] = 1;
    for (std::uint32_t k = 1; k <= n; ++k) out[k] = modq::mul(out[k - 1], base, q);
    return out;
}

}  // namespace

PairEvaluator::PairEvaluator(const MultiPoly& p) {
    if (p.uses(Var::z) || p.uses(Var::w)) throw Error(ErrorCode::arity, "pair evaluator needs a polynomial in x, y");
    dx_ = p.degree_in(Var::x);
    dy_ = p.degree_in(Var::y);
    for (const auto& [e, c] : p.terms()) mpz_lcm(common_den_.get_mpz_t(), common_den_.get_mpz_t(), c.den().get_mpz_t());

    std::map<std::uint32_t, Row> by_y;
    for (const auto& [e, c] : p.terms()) {
        Row& row = by_y[e[1]];
        row.y_exp = e[1];
        row.x_terms.emplace_back(e[0], Integer(c.num() * (common_den_ / c.den())));
    }
    for (auto& [j, row] : by_y) rows_.push_back(std::move(row));
}

Rational PairEvaluator::exact(const Rational& x, const Rational& y) const {
    const auto ap = powers(x.num(), dx_), bp = powers(x.den(), dx_);
    const auto cp = powers(y.num(), dy_), dp = powers(y.den(), dy_);
    Integer numerator, inner;
    for (const auto& row : rows_) {
        inner = 0;
        for (const auto& [i, n] : row.x_terms) inner += n * ap[i] * bp[dx_ - i];
        numerator += inner * cp[row.y_exp] * dp[dy_ - row.y_exp];
    }
    return Rational::canonicalize(numerator, common_den_ * bp[dx_] * dp[dy_]);
}

ModularTable::ModularTable(const PairEvaluator& f, std::span<const Rational> values, std::uint64_t q)
    : q_(q), rows_(f.rows().size()) {
    const std::uint64_t l = modq::reduce(f.common_denominator(), q);
    if (l == 0) {
        usable_ = false;
        return;
    }
    const std::uint64_t inv_l = modq::inv(l, q);
    const auto dx = f.degree_x(), dy = f.degree_y();
    const std::size_t n = values.size();
    inner_.assign(n * rows_, 0);
    outer_.assign(n * rows_, 0);
    x_ok_.assign(n, 0);
    y_ok_.assign(n, 0);

    std::vector<std::vector<std::uint64_t>> row_coeffs;
    for (const auto& row : f.rows()) {
        std::vector<std::uint64_t> rc;
        for (const auto& [i, c] : row.x_terms) rc.push_back(modq::reduce(c, q));
        row_coeffs.push_back(std::move(rc));
    }

    for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t num = modq::reduce(values[v].num(), q);
        const std::uint64_t den = modq::reduce(values[v].den(), q);
        if (den == 0) continue;
        const auto np = powers_mod(num, std::max(dx, dy), q);
        const auto dp = powers_mod(den, std::max(dx, dy), q);

        x_ok_[v] = 1;
        const std::uint64_t x_scale = modq::mul(inv_l, modq::inv(dp[dx], q), q);
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& terms = f.rows()[r].x_terms;
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const auto i = terms[t].first;
                acc = modq::add(acc, modq::mul(row_coeffs[r][t], modq::mul(np[i], dp[dx - i], q), q), q);
            }
            inner_[v * rows_ + r] = modq::mul(acc, x_scale, q);
        }

        y_ok_[v] = 1;
        const std::uint64_t y_scale = modq::inv(dp[dy], q);
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto j = f.rows()[r].y_exp;
            outer_[v * rows_ + r] = modq::mul(modq::mul(np[j], dp[dy - j], q), y_scale, q);
        }
    }
}

std::uint64_t ModularTable::residue(std::size_t ix, std::size_t iy) const noexcept {
    if (!usable_ || !x_ok_[ix] || !y_ok_[iy]) return kUndefinedResidue;
    const std::uint64_t* in = inner_.data() + ix * rows_;
    const std::uint64_t* out = outer_.data() + iy * rows_;
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < rows_; ++r) acc = modq::add(acc, modq::mul(in[r], out[r], q_), q_);
    return acc;
}

std::uint64_t pair_residue(const ModularTable& table, const PairEvaluator& f, std::span<const Rational> values,
                           std::size_t ix, std::size_t iy) {
    const std::uint64_t r = table.residue(ix, iy);
    if (r != kUndefinedResidue) return r;
    return residue(f.exact(values[ix], values[iy]), table.prime());
}

}  // namespace polyinj
