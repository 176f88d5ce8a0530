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

#include <doctest.h>

#include <unordered_set>

#include "polyinj/error.hpp"
#include "polyinj/fingerprint.hpp"
#include "support.hpp"

using namespace polyinj;
using polyinj::testing::q;

TEST_CASE("canonical form") {
    CHECK(q(6, -4).str() == "-3/2");
    CHECK(q(0, 5).str() == "0/1");
    CHECK(q(-3, 7).str() == "-3/7");
    CHECK(q(4, 2).is_integer());
    CHECK_THROWS_AS(Rational::canonicalize(1, 0), Error);
    try {
        Rational::canonicalize(1, 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::domain);
    }
}

TEST_CASE("parse") {
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-6/4") == q(-3, 2));
    CHECK(Rational::parse("0/7").is_zero());
    for (const char* bad : {"", "1/0", "1.5", "x", "1/", "/2", "--1", "1/-2", " 1"})
        CHECK_THROWS_AS(Rational::parse(bad), Error);
}

TEST_CASE("arithmetic") {
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK(q(1, 2) - q(1, 3) == q(1, 6));
    CHECK(q(2, 3) * q(9, 4) == q(3, 2));
    CHECK(q(2, 3) / q(4, 9) == q(3, 2));
    CHECK_THROWS_AS(q(1) / Rational(0), Error);
    CHECK(pow(q(-2, 3), 3) == q(-8, 27));
    CHECK(abs(q(-2, 3)) == q(2, 3));
    CHECK(q(-1, 2) < q(1, 3));
    CHECK(from_double(0.375) == q(3, 8));
    CHECK(from_double(-2.0) == q(-2));
}

TEST_CASE("height") {
    CHECK(Rational(0).height() == 1);
    CHECK(q(-7, 3).height() == 7);
    CHECK(q(2, 9).height() == 9);
    SUBCASE("height one exactly on 0, 1, -1") {
        SeededRng rng(3);
        for (int i = 0; i < 2000; ++i) {
            const Rational r = testing::random_rational(rng, 5);
            CHECK((r.height() == 1) == (r.is_zero() || r == q(1) || r == q(-1)));
        }
    }
}

TEST_CASE("perfect powers") {
    CHECK(is_perfect_power(q(32, 243), 5));
    CHECK(is_perfect_power(q(-32, 243), 5));
    CHECK(is_perfect_power(Rational(0), 5));
    CHECK_FALSE(is_perfect_power(q(2), 5));
    CHECK_FALSE(is_perfect_power(q(-4), 2));
    CHECK(is_perfect_power(q(4, 9), 2));
    CHECK_FALSE(is_perfect_power(q(4, 3), 2));
}

TEST_CASE("hash agrees with equality") {
    CHECK(hash_value(q(2, 4)) == hash_value(q(1, 2)));
    std::unordered_set<std::size_t> seen;
    for (long n = -20; n <= 20; ++n) seen.insert(hash_value(q(n, 7)));
    CHECK(seen.size() > 30);
}

TEST_CASE("fingerprint residues") {
    const std::array<std::uint64_t, 1> five{5};
    CHECK(fingerprint(q(1, 2), five).residues == std::vector<std::uint64_t>{3});
    CHECK(fingerprint(q(1, 5), five).residues == std::vector<std::uint64_t>{kUndefinedResidue});
    const std::array<std::uint64_t, 2> p{11, 13};
    CHECK(fingerprint(q(7, 3), p).residues == std::vector<std::uint64_t>{6, 11});
    CHECK(residue(q(-1), 11) == 10);
    CHECK(residue(Rational(0), 11) == 0);
}

TEST_CASE("fingerprint word arithmetic") {
    const std::uint64_t m = kDefaultPrimes[0];
    CHECK(modq::mul(m - 1, m - 1, m) == 1);
    CHECK(modq::add(m - 1, 5, m) == 4);
    CHECK(modq::mul(modq::inv(123456789, m), 123456789, m) == 1);
    CHECK(modq::reduce(Integer(-1), m) == m - 1);
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    CHECK(modq::reduce(big, m) == modq::pow(10, 40, m));
}

TEST_CASE("fingerprint is a function of the value") {
    SeededRng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Rational r = testing::random_rational(rng, 1000);
        const long k = rng.uniform(1, 50);
        const Rational same = Rational::canonicalize(r.num() * k, r.den() * k);
        CHECK(fingerprint(r, kDefaultPrimes).residues == fingerprint(same, kDefaultPrimes).residues);
    }
}

TEST_CASE("default primes are distinct primes below 2^62") {
    for (std::size_t i = 0; i < kDefaultPrimes.size(); ++i) {
        CHECK(kDefaultPrimes[i] < (std::uint64_t{1} << 62));
        CHECK(mpz_probab_prime_p(Integer(static_cast<unsigned long>(kDefaultPrimes[i])).get_mpz_t(), 30) > 0);
        if (i) CHECK(kDefaultPrimes[i] < kDefaultPrimes[i - 1]);
    }
}
