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

#include "polyinj/expr.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "polyinj/error.hpp"

namespace polyinj {

namespace {

constexpr std::size_t kMaxNesting = 200;
constexpr std::uint64_t kMaxLoweredDegree = 100000;

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
        Expr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail_unexpected();
        return e;
    }

   private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail_unexpected() {
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '(')
            throw ParseError(pos_, "implicit multiplication is not allowed");
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    static Expr binary(Expr::Kind kind, Expr lhs, Expr rhs, std::size_t offset) {
        Expr e;
        e.kind = kind;
        e.offset = offset;
        e.children.push_back(std::move(lhs));
        e.children.push_back(std::move(rhs));
        return e;
    }

    Expr expr() {
        Expr lhs = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            const std::size_t at = pos_++;
            lhs = binary(c == '+' ? Expr::Kind::add : Expr::Kind::sub, std::move(lhs), term(), at);
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (peek() == '*') {
            const std::size_t at = pos_++;
            lhs = binary(Expr::Kind::mul, std::move(lhs), factor(), at);
        }
        return lhs;
    }

    Expr factor() {
        if (++depth_ > kMaxNesting) throw ParseError(pos_, "expression nested too deeply");
        Expr result;
        if (peek() == '-') {
            result.kind = Expr::Kind::neg;
            result.offset = pos_++;
            result.children.push_back(factor());
        } else {
            result = atom();
            if (peek() == '^') {
                Expr p;
                p.kind = Expr::Kind::pow;
                p.offset = pos_++;
                p.exponent = exponent();
                p.children.push_back(std::move(result));
                result = std::move(p);
            }
        }
        --depth_;
        return result;
    }

    std::uint32_t exponent() {
        const char c = peek();
        if (c == '-') throw ParseError(pos_, "negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(pos_, "exponent must be a nonnegative integer");
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError(start, "exponent overflow");
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.'))
            throw ParseError(pos_, "exponent must be a nonnegative integer");
        return static_cast<std::uint32_t>(v);
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Expr atom() {
        const char c = peek();
        Expr e;
        e.offset = pos_;
        if (c == '(') {
            ++pos_;
            e = expr();
            if (peek() != ')') {
                if (pos_ >= text_.size()) throw ParseError(pos_, "missing ')'");
                fail_unexpected();
            }
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::string num = digits();
            if (pos_ < text_.size() && text_[pos_] == '.') throw ParseError(pos_, "decimal literals are not allowed");
            Integer den(1);
            if (peek() == '/') {
                ++pos_;
                const std::size_t den_at = pos_ < text_.size() ? pos_ : text_.size();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(den_at, "denominator must be an unsigned integer");
                den = Integer(digits(), 10);
                if (den == 0) throw ParseError(den_at, "zero denominator");
            }
            e.kind = Expr::Kind::literal;
            e.value = Rational::canonicalize(Integer(num, 10), den);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const auto v = var_from_name(c);
            if (!v) throw ParseError(pos_, std::string("unknown variable '") + c + "'");
            ++pos_;
            e.kind = Expr::Kind::variable;
            e.var = *v;
            return e;
        }
        if (c == '\0') throw ParseError(pos_, "unexpected end of input");
        fail_unexpected();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

MultiPoly lower(const Expr& ast) {
    switch (ast.kind) {
        case Expr::Kind::literal: return MultiPoly::constant(ast.value);
        case Expr::Kind::variable: return MultiPoly::variable(ast.var);
        case Expr::Kind::add: return lower(ast.children[0]) + lower(ast.children[1]);
        case Expr::Kind::sub: return lower(ast.children[0]) - lower(ast.children[1]);
        case Expr::Kind::neg: return -lower(ast.children[0]);
        case Expr::Kind::mul: return lower(ast.children[0]) * lower(ast.children[1]);
        case Expr::Kind::pow: {
            MultiPoly base = lower(ast.children[0]);
            if (static_cast<unsigned __int128>(base.total_degree()) * ast.exponent > kMaxLoweredDegree)
                throw Error(ErrorCode::domain, "expanded degree exceeds " + std::to_string(kMaxLoweredDegree));
            return pow(base, ast.exponent);
        }
    }
    return {};
}

}  // namespace polyinj
