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

#ifndef POLYINJ_RATIONAL_HPP
#define POLYINJ_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace polyinj {

using Integer = mpz_class;

/*
 * Exact rational number, always in lowest terms with a positive denominator.
 * Zero is 0/1. Values are immutable from the outside; arithmetic returns new
 * canonical values.
 */
class Rational {
   public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(const Integer& v) : q_(v) {}

    /* Canonical representative of num/den. Throws ErrorCode::domain if den == 0. */
    static Rational canonicalize(const Integer& num, const Integer& den);

    /* Parses "a", "-a" or "a/b" (decimal integers, b != 0). */
    static Rational parse(std::string_view text);

    const Integer& num() const noexcept { return q_.get_num(); }
    const Integer& den() const noexcept { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    /* Naive height max(|num|, den); 1 for zero. */
    Integer height() const;

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    /* Always "num/den", e.g. "-3/7", "0/1". */
    std::string str() const;
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
        return mpq_equal(lhs.q_.get_mpq_t(), rhs.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
        const int c = cmp(lhs.q_, rhs.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

   private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

Rational pow(const Rational& base, unsigned long exponent);
Rational abs(const Rational& r);

/* Exact dyadic value of a finite double. */
Rational from_double(double v);

/* True iff r = s^p for some rational s (0 counts; negatives need odd p). */
bool is_perfect_power(const Rational& r, unsigned long p);

/* Hash of the canonical value; equal rationals hash equal. */
std::size_t hash_value(const Rational& r) noexcept;

}  // namespace polyinj

#endif
