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

#ifndef POLYINJ_COLLIDE_HPP
#define POLYINJ_COLLIDE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyinj/join.hpp"
#include "polyinj/poly.hpp"
#include "polyinj/rational.hpp"

namespace polyinj {

enum class InputMode { integers, rationals };

std::string_view to_string(InputMode mode) noexcept;        // "int" / "rat"
InputMode input_mode_from_string(std::string_view text);     // throws ErrorCode::parse

/* integers: {-H..H}^2; rationals: {r : height(r) <= H}^2. */
struct SearchSpace {
    InputMode mode = InputMode::integers;
    std::uint64_t height_bound = 1;
};

/* Canonical rationals of height <= H ordered by height, then numerator, then denominator. */
std::vector<Rational> enumerate_inputs(std::uint64_t height_bound);

/* The coordinate values of a search space, in enumeration order. */
std::vector<Rational> space_values(const SearchSpace& space);

using InputPair = std::array<Rational, 2>;

/* f(first) == f(second) == value with first < second (lexicographic on the rational values). */
struct Collision {
    InputPair first;
    InputPair second;
    Rational value;

    friend bool operator==(const Collision&, const Collision&) = default;
    friend auto operator<=>(const Collision& a, const Collision& b) {
        if (auto c = a.first <=> b.first; c != 0) return c;
        return a.second <=> b.second;
    }
};

struct SearchStats {
    std::uint64_t inputs_evaluated = 0;
    std::uint64_t fingerprint_candidates = 0;
    std::uint64_t exact_confirms = 0;
    std::uint64_t escalated_buckets = 0;
    double wall_time_s = 0.0;
};

struct CollisionReport {
    MultiPoly poly;
    SearchSpace space;
    std::vector<Collision> collisions;
    SearchStats stats;
    std::vector<std::uint64_t> primes;
    std::uint64_t shards = 1;
    bool complete = true;
    std::optional<std::filesystem::path> checkpoint;
};

struct SearchOptions {
    std::uint64_t shards = 16;
    unsigned threads = 0;
    std::optional<std::filesystem::path> checkpoint;
    bool resume = false;
    /* Stop scheduling after this many newly finished shards (an interrupted run). */
    std::optional<std::uint64_t> stop_after_shards;
};

/*
 * Every unordered pair of distinct inputs in `space` with equal f-values.
 *
 * The input pairs are split into contiguous shards; each shard evaluates f
 * modulo two word primes. Shards are then merged, bucketed by fingerprint and
 * every bucket is confirmed with exact arithmetic, so the result is sound and
 * complete within the space. With a checkpoint path each finished shard is
 * persisted and `resume` skips it on the next run. Throws ErrorCode::checkpoint
 * on checkpoint I/O failure; state already on disk stays valid.
 */
CollisionReport find_collisions(const MultiPoly& f, const SearchSpace& space, const SearchOptions& options = {});

/* All-pairs exact comparison; the test oracle for find_collisions. */
CollisionReport naive_collisions(const MultiPoly& f, const SearchSpace& space);

/* Fixed text carried by every report. */
inline constexpr std::string_view kCollisionDisclaimer =
    "Bounded-height evidence only: an empty collision list says nothing about inputs outside the searched space "
    "and is not a proof of injectivity.";

}  // namespace polyinj

#endif
