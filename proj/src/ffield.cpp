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

#include "polyinj/ffield.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyinj/error.hpp"

namespace polyinj::ff {

namespace {

std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t invp(std::uint32_t a, std::uint32_t p) {
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.p() != b.p()) throw Error(ErrorCode::domain, "mixing polynomials over different primes");
}

}  // namespace

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw Error(ErrorCode::domain, "characteristic must be a prime");
    for (auto& c : c_) c %= p_;
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator-() const {
    FpPoly r = *this;
    for (auto& c : r.c_) c = c ? p_ - c : 0;
    return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::uint64_t s = (i < a.c_.size() ? a.c_[i] : 0u) + static_cast<std::uint64_t>(i < b.c_.size() ? b.c_[i] : 0u);
        c[i] = static_cast<std::uint32_t>(s % a.p_);
    }
    return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.c_[i]) * b.c_[j]) % a.p_;
    std::vector<std::uint32_t> c(acc.begin(), acc.end());
    return FpPoly(a.p_, std::move(c));
}

FpPoly FpPoly::scaled(std::uint32_t s) const {
    std::vector<std::uint32_t> c(c_);
    for (auto& v : c) v = mulp(v, s % p_, p_);
    return FpPoly(p_, std::move(c));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw Error(ErrorCode::domain, "polynomial division by zero");
    const std::uint32_t p = a.p();
    std::vector<std::uint32_t> rem(a.coeffs());
    const auto& bc = b.coeffs();
    if (rem.size() < bc.size()) return {FpPoly(p), a};
    std::vector<std::uint32_t> quo(rem.size() - bc.size() + 1, 0);
    const std::uint32_t inv_lead = invp(b.lead(), p);
    for (std::size_t k = quo.size(); k-- > 0;) {
        const std::uint32_t q = mulp(rem[k + bc.size() - 1], inv_lead, p);
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] = (rem[k + j] + p - mulp(q, bc[j], p)) % p;
    }
    return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

FpPoly gcd(FpPoly a, FpPoly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        FpPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.scaled(invp(a.lead(), a.p()));
}

FpPoly derivative(const FpPoly& g) {
    std::vector<std::uint32_t> c;
    for (std::size_t i = 1; i < g.coeffs().size(); ++i)
        c.push_back(mulp(g.coeffs()[i], static_cast<std::uint32_t>(i % g.p()), g.p()));
    return FpPoly(g.p(), std::move(c));
}

FpPoly frobenius(const FpPoly& g) {
    if (g.is_zero()) return g;
    std::vector<std::uint32_t> c(g.coeffs().size() * g.p() - (g.p() - 1), 0);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) c[i * g.p()] = g.coeffs()[i];  // a^p = a in F_p
    return FpPoly(g.p(), std::move(c));
}

FpPoly pow(FpPoly base, std::uint64_t e) {
    FpPoly result = FpPoly::constant(base.p(), 1);
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FpRatFun::FpRatFun(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
    require_same_field(num_, den_);
    if (den_.is_zero()) throw Error(ErrorCode::domain, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FpPoly::constant(num_.p(), 1);
        return;
    }
    const FpPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    const std::uint32_t inv_lead = invp(den_.lead(), den_.p());
    num_ = num_.scaled(inv_lead);
    den_ = den_.scaled(inv_lead);
}

FpRatFun operator+(const FpRatFun& a, const FpRatFun& b) {
    if (a.den_ == b.den_) return FpRatFun(a.num_ + b.num_, a.den_);
    return FpRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FpRatFun operator-(const FpRatFun& a, const FpRatFun& b) {
    if (a.den_ == b.den_) return FpRatFun(a.num_ - b.num_, a.den_);
    return FpRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FpRatFun operator*(const FpRatFun& a, const FpRatFun& b) { return FpRatFun(a.num_ * b.num_, a.den_ * b.den_); }

FpRatFun operator/(const FpRatFun& a, const FpRatFun& b) {
    if (b.is_zero()) throw Error(ErrorCode::domain, "division by the zero rational function");
    return FpRatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const FpRatFun& a, const FpRatFun& b) {
    return std::tie(a.num_.coeffs(), a.den_.coeffs()) < std::tie(b.num_.coeffs(), b.den_.coeffs());
}

FpRatFun frobenius(const FpRatFun& h) {
    // num, den coprime => num(t^p), den(t^p) coprime; monic stays monic
    return FpRatFun(frobenius(h.num()), frobenius(h.den()));
}

FpRatFun derivative(const FpRatFun& h) {
    return FpRatFun(derivative(h.num()) * h.den() - h.num() * derivative(h.den()), h.den() * h.den());
}

FpRatFun eval_injection(const FpRatFun& x, const FpRatFun& y) {
    if (x.p() != y.p()) throw Error(ErrorCode::domain, "mixing rational functions over different primes");
    return frobenius(x) + FpRatFun::t(x.p()) * frobenius(y);
}

bool is_pth_power(const FpRatFun& h) { return derivative(h).is_zero(); }

namespace {

std::string coeff_list(const FpPoly& g) {
    if (g.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) s += (i ? "," : "") + std::to_string(g.coeffs()[i]);
    return s;
}

FpPoly parse_list(std::uint32_t p, std::string_view text, std::size_t base_offset) {
    std::vector<std::uint32_t> c;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (item.empty() || item.size() > 9 ||
            !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw ParseError(base_offset + pos, "expected a nonnegative coefficient");
        c.push_back(static_cast<std::uint32_t>(std::stoul(std::string(item)) % p));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return FpPoly(p, std::move(c));
}

}  // namespace

std::string to_text(const FpRatFun& h) { return coeff_list(h.num()) + ";" + coeff_list(h.den()); }

FpRatFun from_text(std::uint32_t p, std::string_view text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos) return FpRatFun(parse_list(p, text, 0));
    FpPoly den = parse_list(p, text.substr(semi + 1), semi + 1);
    if (den.is_zero()) throw ParseError(semi + 1, "zero denominator");
    return FpRatFun(parse_list(p, text.substr(0, semi), 0), std::move(den));
}

VerificationResult verify_injection(const FpRatFun& x1, const FpRatFun& y1, const FpRatFun& x2, const FpRatFun& y2) {
    if (x1 == x2 && y1 == y2) return EqualInputs{};
    FpRatFun diff = eval_injection(x1, y1) - eval_injection(x2, y2);
    if (!diff.is_zero()) return DistinctValues{std::move(diff)};
    // (x1 - x2)^p = t (y2 - y1)^p with distinct inputs forces y1 != y2
    const FpRatFun witness = (x1 - x2) / (y2 - y1);
    if (frobenius(witness) == FpRatFun::t(x1.p()) || is_pth_power(FpRatFun::t(x1.p())))
        throw std::logic_error("t is a p-th power: witness " + to_text(witness));
    throw std::logic_error("equal values at distinct inputs without a p-th root witness");
}

FpRatFun random_ratfun(std::uint32_t p, unsigned degree_bound, SeededRng& rng) {
    auto draw = [&] {
        std::vector<std::uint32_t> c(degree_bound + 1);
        for (auto& v : c) v = static_cast<std::uint32_t>(rng.uniform(0, p - 1));
        return FpPoly(p, std::move(c));
    };
    FpPoly num = draw();
    FpPoly den = draw();
    while (den.is_zero()) den = draw();
    return FpRatFun(std::move(num), std::move(den));
}

SearchReport collision_search(std::uint32_t p, unsigned degree_bound, std::uint64_t trials, std::uint64_t seed) {
    SeededRng rng(seed);
    struct Sample {
        FpRatFun value, x, y;
    };
    std::vector<Sample> samples;
    samples.reserve(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        FpRatFun x = random_ratfun(p, degree_bound, rng);
        FpRatFun y = random_ratfun(p, degree_bound, rng);
        samples.push_back({eval_injection(x, y), std::move(x), std::move(y)});
    }

    SearchReport report{p, degree_bound, trials, seed};
    for (std::size_t i = 1; i < samples.size(); ++i) {
        std::visit([](const auto&) {}, verify_injection(samples[i - 1].x, samples[i - 1].y, samples[i].x, samples[i].y));
        ++report.pairwise_checks;
    }

    // global join: sort by value, then by input
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
        if (a.value < b.value) return true;
        if (b.value < a.value) return false;
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    });
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const bool new_value = i == 0 || !(samples[i].value == samples[i - 1].value);
        const bool new_input = i == 0 || !(samples[i].x == samples[i - 1].x && samples[i].y == samples[i - 1].y);
        report.distinct_values += new_value;
        report.distinct_inputs += new_input;
        if (!new_value && new_input) {
            ++report.collisions;
            verify_injection(samples[i - 1].x, samples[i - 1].y, samples[i].x, samples[i].y);
        }
    }
    return report;
}

}  // namespace polyinj::ff
