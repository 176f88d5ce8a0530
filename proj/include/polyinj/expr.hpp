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

#ifndef POLYINJ_EXPR_HPP
#define POLYINJ_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "polyinj/poly.hpp"
#include "polyinj/rational.hpp"

namespace polyinj {

/*
 * Polynomial expression tree. Grammar (whitespace-insensitive):
 *
 *   expr     := term (('+'|'-') term)*
 *   term     := factor ('*' factor)*
 *   factor   := '-' factor | atom ('^' uint)?
 *   atom     := rational | var | '(' expr ')'
 *   var      := 'x' | 'y' | 'z' | 'w'
 *   rational := int ('/' uint)?
 */
struct Expr {
    enum class Kind { literal, variable, add, sub, neg, mul, pow };

    Kind kind = Kind::literal;
    Rational value;               // literal
    Var var = Var::x;             // variable
    std::uint32_t exponent = 0;   // pow
    std::vector<Expr> children;   // add/sub/mul: 2, neg/pow: 1
    std::size_t offset = 0;       // byte offset in the source

    friend bool operator==(const Expr&, const Expr&) = default;
};

/* Throws ParseError carrying the byte offset of the problem. */
Expr parse(std::string_view text);

/* Fully expanded polynomial over the variables that occur in the tree. */
MultiPoly lower(const Expr& ast);

inline MultiPoly parse_poly(std::string_view text) { return lower(parse(text)); }

}  // namespace polyinj

#endif
