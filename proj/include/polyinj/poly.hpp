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

#ifndef POLYINJ_POLY_HPP
#define POLYINJ_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyinj/rational.hpp"

namespace polyinj {

/* Variable universe of the whole library, in canonical order. */
enum class Var : std::uint8_t { x = 0, y = 1, z = 2, w = 3 };
inline constexpr std::size_t kMaxVars = 4;

char var_name(Var v) noexcept;
std::optional<Var> var_from_name(char c) noexcept;

/* Exponents over the full universe (x, y, z, w), indexed by Var. */
using Exponents = std::array<std::uint32_t, kMaxVars>;

std::uint64_t total_degree(const Exponents& e) noexcept;

/* Graded-lex, largest first: higher total degree first, ties by lex on (x, y, z, w). */
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

/*
 * Sparse polynomial with exact rational coefficients in a subset of {x,y,z,w}.
 *
 * `vars` is the declared variable list in canonical order; it fixes the
 * arity of eval() and the exponent layout of serialized terms. Terms never
 * hold zero coefficients, so the empty term map is the zero polynomial.
 * Equality compares terms only: x^2 declared over (x) equals x^2 declared
 * over (x, y).
 */
class MultiPoly {
   public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<Var> vars);

    static MultiPoly constant(const Rational& c, std::vector<Var> vars = {});
    static MultiPoly variable(Var v);

    const std::vector<Var>& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool uses(Var v) const noexcept;

    /* Largest total degree of a term; 0 for constants and the zero polynomial. */
    std::uint64_t total_degree() const noexcept;
    std::uint32_t degree_in(Var v) const noexcept;
    Rational coefficient(const Exponents& e) const;

    /* Adds c * monomial(e). Variables with a nonzero exponent join `vars`. */
    void add_term(const Exponents& e, const Rational& c);

    /* Same polynomial declared over `vars`; throws ErrorCode::arity if a used variable is dropped. */
    MultiPoly with_vars(std::vector<Var> vars) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& s);

    friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
    friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
    friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
    friend MultiPoly operator*(MultiPoly lhs, const Rational& s) { return lhs *= s; }
    friend MultiPoly operator*(const Rational& s, MultiPoly rhs) { return rhs *= s; }

    friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

   private:
    void declare(Var v);

    std::vector<Var> vars_;
    TermMap terms_;
};

/* Canonical sorted union of two variable lists. */
std::vector<Var> merge_vars(const std::vector<Var>& a, const std::vector<Var>& b);

MultiPoly pow(const MultiPoly& base, std::uint32_t exponent);

/* Value at `point`, given in the order of P.vars(). Throws ErrorCode::arity. */
Rational eval(const MultiPoly& p, std::span<const Rational> point);

/* Value with every universe variable assigned; unused slots are ignored. */
Rational eval_at(const MultiPoly& p, const std::array<Rational, kMaxVars>& xyzw);

/* Images of variables; every declared variable of the source must be mapped. */
using Substitution = std::map<Var, MultiPoly>;

/* Expanded composition P(sigma(v1), ..., sigma(vn)). Throws ErrorCode::unmapped_variable. */
MultiPoly substitute(const MultiPoly& p, const Substitution& sigma);

/* Common total degree of all terms, or nullopt. Throws ErrorCode::zero_polynomial. */
std::optional<std::uint64_t> homogeneity(const MultiPoly& p);

/* Formal partial derivative; keeps the declared variables. */
MultiPoly partial(const MultiPoly& p, Var v);

/* Deterministic pretty-printer, e.g. "x^7 + 3*y^7", "-1/2*x^2*y", "0". */
std::string render(const MultiPoly& p);

}  // namespace polyinj

#endif
