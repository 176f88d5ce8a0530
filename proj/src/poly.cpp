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

#include "polyinj/poly.hpp"

#include <algorithm>
#include <sstream>

#include "polyinj/error.hpp"

namespace polyinj {

char var_name(Var v) noexcept { return "xyzw"[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(char c) noexcept {
    switch (c) {
        case 'x': return Var::x;
        case 'y': return Var::y;
        case 'z': return Var::z;
        case 'w': return Var::w;
        default: return std::nullopt;
    }
}

std::uint64_t total_degree(const Exponents& e) noexcept {
    std::uint64_t d = 0;
    for (auto k : e) d += k;
    return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents r{};
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (__builtin_add_overflow(a[i], b[i], &r[i])) throw Error(ErrorCode::domain, "exponent overflow");
    return r;
}

void accumulate(MultiPoly::TermMap& terms, const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

MultiPoly::MultiPoly(std::vector<Var> vars) : vars_(merge_vars(vars, {})) {}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<Var> vars) {
    MultiPoly p(std::move(vars));
    accumulate(p.terms_, Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    MultiPoly p({v});
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    p.terms_.emplace(e, Rational(1));
    return p;
}

bool MultiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

bool MultiPoly::uses(Var v) const noexcept { return degree_in(v) > 0; }

std::uint64_t MultiPoly::total_degree() const noexcept {
    // grlex puts the largest total degree first
    return terms_.empty() ? 0 : polyinj::total_degree(terms_.begin()->first);
}

std::uint32_t MultiPoly::degree_in(Var v) const noexcept {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
    return d;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

void MultiPoly::declare(Var v) {
    if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_ = merge_vars(vars_, {v});
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e[i] != 0) declare(static_cast<Var>(i));
    accumulate(terms_, e, c);
}

MultiPoly MultiPoly::with_vars(std::vector<Var> vars) const {
    MultiPoly p(std::move(vars));
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const auto v = static_cast<Var>(i);
        if (uses(v) && std::find(p.vars_.begin(), p.vars_.end(), v) == p.vars_.end())
            throw Error(ErrorCode::arity, std::string("variable ") + var_name(v) + " is used but not declared");
    }
    p.terms_ = terms_;
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    vars_ = merge_vars(vars_, rhs.vars_);
    for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    vars_ = merge_vars(vars_, rhs.vars_);
    for (const auto& [e, c] : rhs.terms_) accumulate(terms_, e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
    MultiPoly p(merge_vars(lhs.vars_, rhs.vars_));
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_) accumulate(p.terms_, add_exponents(ea, eb), ca * cb);
    return p;
}

std::vector<Var> merge_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
    std::vector<Var> out(a);
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultiPoly pow(const MultiPoly& base, std::uint32_t exponent) {
    MultiPoly result = MultiPoly::constant(Rational(1), base.vars());
    MultiPoly sq = base;
    while (exponent) {
        if (exponent & 1) result = result * sq;
        exponent >>= 1;
        if (exponent) sq = sq * sq;
    }
    return result;
}

namespace {

/* Horner-free term evaluation with per-variable power caches. */
Rational eval_universe(const MultiPoly& p, const std::array<const Rational*, kMaxVars>& values) {
    std::array<std::vector<Rational>, kMaxVars> powers;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const auto d = p.degree_in(static_cast<Var>(i));
        if (d == 0) continue;
        powers[i].reserve(d + 1);
        powers[i].emplace_back(1);
        for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * *values[i]);
    }
    Rational sum;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i]) t *= powers[i][e[i]];
        sum += t;
    }
    return sum;
}

}  // namespace

Rational eval(const MultiPoly& p, std::span<const Rational> point) {
    if (point.size() != p.vars().size())
        throw Error(ErrorCode::arity, "point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                                          std::to_string(p.vars().size()) + " variables");
    std::array<const Rational*, kMaxVars> values{};
    for (std::size_t i = 0; i < point.size(); ++i) values[static_cast<std::size_t>(p.vars()[i])] = &point[i];
    return eval_universe(p, values);
}

Rational eval_at(const MultiPoly& p, const std::array<Rational, kMaxVars>& xyzw) {
    std::array<const Rational*, kMaxVars> values{};
    for (std::size_t i = 0; i < kMaxVars; ++i) values[i] = &xyzw[i];
    return eval_universe(p, values);
}

MultiPoly substitute(const MultiPoly& p, const Substitution& sigma) {
    std::vector<Var> out_vars;
    for (Var v : p.vars()) {
        auto it = sigma.find(v);
        if (it == sigma.end())
            throw Error(ErrorCode::unmapped_variable, std::string("no image for variable ") + var_name(v));
        out_vars = merge_vars(out_vars, it->second.vars());
    }

    // powers[v][k] = sigma(v)^k, filled lazily in increasing k
    std::array<std::vector<MultiPoly>, kMaxVars> powers;
    auto power = [&](Var v, std::uint32_t k) -> const MultiPoly& {
        auto& cache = powers[static_cast<std::size_t>(v)];
        const MultiPoly& image = sigma.at(v);
        if (cache.empty()) cache.push_back(MultiPoly::constant(Rational(1)));
        while (cache.size() <= k) cache.push_back(cache.back() * image);
        return cache[k];
    };

    MultiPoly result(out_vars);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(c);
        for (std::size_t i = 0; i < kMaxVars; ++i)
            if (e[i]) term = term * power(static_cast<Var>(i), e[i]);
        result += term;
    }
    return result.with_vars(merge_vars(out_vars, result.vars()));
}

std::optional<std::uint64_t> homogeneity(const MultiPoly& p) {
    if (p.is_zero()) throw Error(ErrorCode::zero_polynomial, "homogeneity of the zero polynomial");
    const auto d = p.total_degree();
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) != d) return std::nullopt;
    return d;
}

MultiPoly partial(const MultiPoly& p, Var v) {
    const auto i = static_cast<std::size_t>(v);
    MultiPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponents de = e;
        --de[i];
        out.add_term(de, c * Rational(static_cast<long>(e[i])));
    }
    return out;
}

std::string render(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        const Rational mag = abs(c);
        const bool is_unit_monomial = mag == Rational(1) && e != Exponents{};
        bool need_star = false;
        if (!is_unit_monomial) {
            os << mag.num().get_str();
            if (!mag.is_integer()) os << '/' << mag.den().get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < kMaxVars; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << '*';
            os << var_name(static_cast<Var>(i));
            if (e[i] > 1) os << '^' << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace polyinj
