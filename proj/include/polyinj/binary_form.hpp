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

#ifndef POLYINJ_BINARY_FORM_HPP
#define POLYINJ_BINARY_FORM_HPP

#include <cstdint>
#include <vector>

#include "polyinj/poly.hpp"
#include "polyinj/rational.hpp"

namespace polyinj {

/*
 * Nonzero homogeneous polynomial in (x, y). coeffs[i] multiplies x^(d-i) y^i.
 */
class BinaryForm {
   public:
    /* Throws ErrorCode::zero_polynomial when every coefficient is zero. */
    explicit BinaryForm(std::vector<Rational> coeffs);

    /* Throws zero_polynomial, or domain if P is not homogeneous in x, y only. */
    static BinaryForm from_poly(const MultiPoly& p);

    std::uint64_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /* Declared over (x, y). */
    MultiPoly to_poly() const;

    Rational operator()(const Rational& x, const Rational& y) const;

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

   private:
    std::vector<Rational> coeffs_;
};

/* Squarefree test: gcd(F(x,1), d/dx F(x,1)) constant and y^2 does not divide F. */
bool is_separable(const BinaryForm& f);

}  // namespace polyinj

#endif
