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

#ifndef POLYINJ_RANDOM_HPP
#define POLYINJ_RANDOM_HPP

#include <cstdint>
#include <random>

namespace polyinj {

/*
 * Seeded 64-bit generator with a bounded draw defined here rather than by the
 * standard library distributions, whose output is implementation-specific.
 * Same seed, same sequence on every platform.
 */
class SeededRng {
   public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /* Uniform in [lo, hi] by rejection sampling. */
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t v;
        do v = next();
        while (v >= limit);
        return lo + static_cast<std::int64_t>(v % span);
    }

   private:
    std::mt19937_64 gen_;
};

}  // namespace polyinj

#endif
