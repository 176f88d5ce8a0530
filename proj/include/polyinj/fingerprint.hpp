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

#ifndef POLYINJ_FINGERPRINT_HPP
#define POLYINJ_FINGERPRINT_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "polyinj/rational.hpp"

namespace polyinj {

/* Residue slot value for "prime divides the denominator". Never a valid residue. */
inline constexpr std::uint64_t kUndefinedResidue = ~std::uint64_t{0};

/* The four largest primes below 2^62, in decreasing order. A run uses a prefix. */
inline constexpr std::array<std::uint64_t, 4> kDefaultPrimes = {
    4611686018427387847ULL,
    4611686018427387817ULL,
    4611686018427387787ULL,
    4611686018427387761ULL,
};

struct Fingerprint {
    std::vector<std::uint64_t> residues;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/* num * den^-1 mod q, or kUndefinedResidue when q | den. */
std::uint64_t residue(const Rational& r, std::uint64_t q);

Fingerprint fingerprint(const Rational& r, std::span<const std::uint64_t> primes);

namespace modq {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t q) noexcept {
    const std::uint64_t s = a + b;  // q < 2^63, no wraparound
    return s >= q ? s - q : s;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t q) noexcept;

/* Inverse of a nonzero residue modulo the prime q. */
inline std::uint64_t inv(std::uint64_t a, std::uint64_t q) noexcept { return pow(a, q - 2, q); }

/* Reduction of an arbitrary integer into [0, q). */
std::uint64_t reduce(const Integer& v, std::uint64_t q);

}  // namespace modq

}  // namespace polyinj

#endif
