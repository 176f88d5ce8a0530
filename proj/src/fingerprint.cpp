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

#include "polyinj/fingerprint.hpp"

namespace polyinj {

namespace modq {

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t q) noexcept {
    std::uint64_t result = 1 % q;
    base %= q;
    while (e) {
        if (e & 1) result = mul(result, base, q);
        base = mul(base, base, q);
        e >>= 1;
    }
    return result;
}

std::uint64_t reduce(const Integer& v, std::uint64_t q) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(v.get_mpz_t(), q);
}

}  // namespace modq

std::uint64_t residue(const Rational& r, std::uint64_t q) {
    const std::uint64_t den = modq::reduce(r.den(), q);
    if (den == 0) return kUndefinedResidue;
    return modq::mul(modq::reduce(r.num(), q), modq::inv(den, q), q);
}

Fingerprint fingerprint(const Rational& r, std::span<const std::uint64_t> primes) {
    Fingerprint fp;
    fp.residues.reserve(primes.size());
    for (auto q : primes) fp.residues.push_back(residue(r, q));
    return fp;
}

}  // namespace polyinj
