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

#ifndef POLYINJ_FFIELD_HPP
#define POLYINJ_FFIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyinj/random.hpp"

namespace polyinj::ff {

/* Dense polynomial over F_p in t, low degree first, no trailing zeros (zero is empty). */
class FpPoly {
   public:
    explicit FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs = {});

    static FpPoly constant(std::uint32_t p, std::uint32_t c) { return FpPoly(p, {c}); }
    static FpPoly t(std::uint32_t p) { return FpPoly(p, {0, 1}); }

    std::uint32_t p() const noexcept { return p_; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /* -1 for the zero polynomial. */
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }

    FpPoly operator-() const;
    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    FpPoly scaled(std::uint32_t s) const;

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

   private:
    void trim();
    std::uint32_t p_;
    std::vector<std::uint32_t> c_;
};

/* (quotient, remainder); throws ErrorCode::domain on division by zero. */
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/* Monic gcd (zero if both are zero). */
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly derivative(const FpPoly& g);
/* g(t^p), which equals g(t)^p over F_p. */
FpPoly frobenius(const FpPoly& g);
FpPoly pow(FpPoly base, std::uint64_t e);

/* num/den in lowest terms with monic den. */
class FpRatFun {
   public:
    /* Throws ErrorCode::domain when den is zero. */
    FpRatFun(FpPoly num, FpPoly den);
    explicit FpRatFun(FpPoly num) : FpRatFun(num, FpPoly::constant(num.p(), 1)) {}

    static FpRatFun zero(std::uint32_t p) { return FpRatFun(FpPoly(p)); }
    static FpRatFun t(std::uint32_t p) { return FpRatFun(FpPoly::t(p)); }

    std::uint32_t p() const noexcept { return num_.p(); }
    const FpPoly& num() const noexcept { return num_; }
    const FpPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend FpRatFun operator+(const FpRatFun& a, const FpRatFun& b);
    friend FpRatFun operator-(const FpRatFun& a, const FpRatFun& b);
    friend FpRatFun operator*(const FpRatFun& a, const FpRatFun& b);
    friend FpRatFun operator/(const FpRatFun& a, const FpRatFun& b);

    friend bool operator==(const FpRatFun&, const FpRatFun&) = default;
    friend bool operator<(const FpRatFun& a, const FpRatFun& b);

   private:
    FpPoly num_, den_;
};

/* h^p computed coefficientwise as num(t^p)/den(t^p). */
FpRatFun frobenius(const FpRatFun& h);
FpRatFun derivative(const FpRatFun& h);

/* x^p + t y^p. */
FpRatFun eval_injection(const FpRatFun& x, const FpRatFun& y);

/* h in F_p(t)^p, decided by dh/dt == 0. */
bool is_pth_power(const FpRatFun& h);

/* Text form "n0,n1,...;d0,d1,..." (coefficients low degree first). Zero numerator is "0". */
std::string to_text(const FpRatFun& h);
FpRatFun from_text(std::uint32_t p, std::string_view text);

struct EqualInputs {};
struct DistinctValues {
    FpRatFun difference;  // f(x1, y1) - f(x2, y2), nonzero
};

using VerificationResult = std::variant<EqualInputs, DistinctValues>;

/*
 * Decides f(x1, y1) vs f(x2, y2) for f = x^p + t y^p. Equal values at distinct
 * inputs would make t = ((x1 - x2) / (y2 - y1))^p a p-th power, which is
 * impossible; reaching that branch throws std::logic_error.
 */
VerificationResult verify_injection(const FpRatFun& x1, const FpRatFun& y1, const FpRatFun& x2, const FpRatFun& y2);

struct SearchReport {
    std::uint32_t p;
    unsigned degree_bound;
    std::uint64_t trials;
    std::uint64_t seed;
    std::uint64_t distinct_inputs = 0;
    std::uint64_t distinct_values = 0;
    std::uint64_t pairwise_checks = 0;   // verify_injection calls on consecutive draws
    std::uint64_t collisions = 0;
};

/* Random element with numerator and denominator degrees <= degree_bound. */
FpRatFun random_ratfun(std::uint32_t p, unsigned degree_bound, SeededRng& rng);

/*
 * Draws `trials` random inputs (x, y), evaluates f on all of them and checks
 * globally that distinct inputs never share a value.
 */
SearchReport collision_search(std::uint32_t p, unsigned degree_bound, std::uint64_t trials, std::uint64_t seed);

}  // namespace polyinj::ff

#endif
