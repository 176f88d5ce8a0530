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

#include "polyinj/binary_form.hpp"

#include <algorithm>

#include "polyinj/error.hpp"

namespace polyinj {

BinaryForm::BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); }))
        throw Error(ErrorCode::zero_polynomial, "binary form must be nonzero");
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p) {
    const auto d = homogeneity(p);
    if (!d) throw Error(ErrorCode::domain, "polynomial is not homogeneous: " + render(p));
    if (p.uses(Var::z) || p.uses(Var::w)) throw Error(ErrorCode::domain, "binary form may only use x and y");
    std::vector<Rational> coeffs(*d + 1);
    for (const auto& [e, c] : p.terms()) coeffs[e[1]] = c;
    return BinaryForm(std::move(coeffs));
}

MultiPoly BinaryForm::to_poly() const {
    MultiPoly p({Var::x, Var::y});
    const auto d = static_cast<std::uint32_t>(degree());
    for (std::uint32_t i = 0; i <= d; ++i) p.add_term({d - i, i, 0, 0}, coeffs_[i]);
    return p;
}

Rational BinaryForm::operator()(const Rational& x, const Rational& y) const {
    const auto d = degree();
    std::vector<Rational> ypow(d + 1, Rational(1));
    for (std::size_t i = 1; i <= d; ++i) ypow[i] = ypow[i - 1] * y;
    Rational sum, xpow(1);
    for (std::size_t k = 0; k <= d; ++k) {
        sum += coeffs_[d - k] * xpow * ypow[d - k];
        xpow *= x;
    }
    return sum;
}

namespace {

/* Dense univariate polynomial over Q, low degree first, no trailing zeros. */
using UPoly = std::vector<Rational>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

UPoly remainder(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational q = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        trim(a);
    }
    return a;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = remainder(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_separable(const BinaryForm& f) {
    const auto& c = f.coeffs();
    const auto d = f.degree();
    // multiplicity of the factor y = number of leading zero coefficients (no x^d, x^(d-1) y, ...)
    std::size_t y_mult = 0;
    while (c[y_mult].is_zero()) ++y_mult;
    if (y_mult > 1) return false;

    UPoly g(d + 1);  // g(x) = F(x, 1) = sum c_i x^(d-i)
    for (std::size_t i = 0; i <= d; ++i) g[d - i] = c[i];
    trim(g);
    if (g.size() <= 1) return true;  // F = c*y^d with d <= 1 here
    return gcd(g, derivative(g)).size() == 1;
}

}  // namespace polyinj
