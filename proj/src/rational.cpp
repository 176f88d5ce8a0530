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

#include "polyinj/rational.hpp"

#include <cctype>
#include <cmath>
#include <functional>

#include "polyinj/error.hpp"

namespace polyinj {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::domain: return "domain";
        case ErrorCode::arity: return "arity";
        case ErrorCode::unmapped_variable: return "unmapped_variable";
        case ErrorCode::zero_polynomial: return "zero_polynomial";
        case ErrorCode::singular_matrix: return "singular_matrix";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::no_collision_found: return "no_collision_found";
        case ErrorCode::hensel_inapplicable: return "hensel_inapplicable";
        case ErrorCode::checkpoint: return "checkpoint";
        case ErrorCode::parse: return "parse";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

Rational Rational::canonicalize(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorCode::domain, "rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw Error(ErrorCode::parse, "malformed integer '" + std::string(s) + "'");
    return Integer(std::string(s.front() == '+' ? s.substr(1) : s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error(ErrorCode::parse, "malformed denominator in '" + std::string(text) + "'");
    return canonicalize(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

Integer Rational::height() const {
    Integer a = ::abs(q_.get_num());
    if (is_zero()) return 1;
    return a > q_.get_den() ? a : Integer(q_.get_den());
}

std::string Rational::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error(ErrorCode::domain, "division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
    return Rational::canonicalize(n, d);
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational from_double(double v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::domain, "non-finite double");
    mpq_class q(v);
    return Rational::canonicalize(q.get_num(), q.get_den());
}

bool is_perfect_power(const Rational& r, unsigned long p) {
    if (p == 0) throw Error(ErrorCode::domain, "zeroth root");
    if (r.is_zero() || p == 1) return true;
    if (r.sign() < 0 && p % 2 == 0) return false;
    Integer n = ::abs(r.num());
    return mpz_root(Integer().get_mpz_t(), n.get_mpz_t(), p) != 0 &&
           mpz_root(Integer().get_mpz_t(), r.den().get_mpz_t(), p) != 0;
}

std::size_t hash_value(const Rational& r) noexcept {
    const std::size_t h1 = mpz_fdiv_ui(r.num().get_mpz_t(), 4294967291UL) + (r.sign() < 0 ? 1u : 0u);
    const std::size_t h2 = mpz_fdiv_ui(r.den().get_mpz_t(), 4294967279UL);
    return std::hash<std::size_t>{}(h1 * 0x9E3779B97F4A7C15ULL ^ h2);
}

}  // namespace polyinj
